// render.hpp — deterministic SVG output for layered drawings.
//
// All arithmetic is integral and every attribute is emitted in a fixed
// order, so rendering the same drawing twice yields byte-identical files.
// One <g class="layer"> per layer id (ascending) holds the edge <line>s,
// an optional <g class="conflicts"> overlay re-draws offending entities,
// and <g class="vertices"> puts the vertex <circle>s on top.
#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "gkbook/geom.hpp"
#include "gkbook/graph.hpp"

namespace gkbook {

struct RenderStyle {
    std::vector<std::string> palette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    std::string conflict_color = "#ff0000";
    std::string vertex_color = "#111111";
    int vertex_radius = 4;
    int scale = 24;
    int margin = 20;
};

inline std::string render_svg(const Graph& g, const LayeredDrawing& d,
                              const RenderStyle& style = {},
                              const ValidationReport* highlight = nullptr) {
    check_graph(g);
    if (static_cast<int>(d.positions.size()) != g.n)
        throw std::invalid_argument("render_svg: one position per vertex required");
    if (d.edge_layers.size() != g.edges.size())
        throw std::invalid_argument("render_svg: one layer per edge required");
    if (style.scale < 1 || style.margin < 0 || style.vertex_radius < 1 || style.palette.empty())
        throw std::invalid_argument("render_svg: bad style");

    std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (std::size_t t = 0; t < d.positions.size(); ++t) {
        const Point& p = d.positions[t];
        if (t == 0) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
        } else {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    constexpr std::int64_t kMaxRange = std::int64_t{1} << 40;
    if (max_x - min_x > kMaxRange || max_y - min_y > kMaxRange)
        throw std::invalid_argument("render_svg: coordinate range too large");

    const std::int64_t scale = style.scale, margin = style.margin;
    auto px = [&](const Point& p) { return (p.x - min_x) * scale + margin; };
    auto py = [&](const Point& p) { return (max_y - p.y) * scale + margin; };  // y grows upward
    const std::int64_t width = (max_x - min_x) * scale + 2 * margin;
    const std::int64_t height = (max_y - min_y) * scale + 2 * margin;

    std::string svg;
    auto num = [](std::int64_t v) { return std::to_string(v); };
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";

    auto edge_line = [&](int e) {
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        const Point& a = d.positions[static_cast<std::size_t>(ed.u)];
        const Point& b = d.positions[static_cast<std::size_t>(ed.v)];
        return "<line x1=\"" + num(px(a)) + "\" y1=\"" + num(py(a)) + "\" x2=\"" + num(px(b)) +
               "\" y2=\"" + num(py(b)) + "\"/>\n";
    };

    int layers = 0;
    for (int l : d.edge_layers) layers = std::max(layers, l + 1);
    for (int layer = 0; layer < layers; ++layer) {
        const std::string& color = style.palette[static_cast<std::size_t>(layer) % style.palette.size()];
        svg += "<g class=\"layer\" data-layer=\"" + num(layer) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\" fill=\"none\">\n";
        for (int e = 0; e < g.edge_count(); ++e)
            if (d.edge_layers[static_cast<std::size_t>(e)] == layer) svg += edge_line(e);
        svg += "</g>\n";
    }

    if (highlight && !highlight->conflicts.empty()) {
        std::set<int> edges, vertices;
        for (const Conflict& c : highlight->conflicts) {
            switch (c.entities) {
                case ConflictEntities::EdgeEdge:
                    edges.insert(c.a);
                    edges.insert(c.b);
                    break;
                case ConflictEntities::VertexEdge:
                    vertices.insert(c.a);
                    edges.insert(c.b);
                    break;
                case ConflictEntities::VertexVertex:
                    vertices.insert(c.a);
                    vertices.insert(c.b);
                    break;
            }
        }
        svg += "<g class=\"conflicts\" stroke=\"" + style.conflict_color +
               "\" stroke-width=\"3\" fill=\"none\">\n";
        for (int e : edges) svg += edge_line(e);
        for (int v : vertices) {
            const Point& p = d.positions[static_cast<std::size_t>(v)];
            svg += "<circle cx=\"" + num(px(p)) + "\" cy=\"" + num(py(p)) + "\" r=\"" +
                   num(style.vertex_radius + 3) + "\"/>\n";
        }
        svg += "</g>\n";
    }

    svg += "<g class=\"vertices\" fill=\"" + style.vertex_color + "\" stroke=\"none\">\n";
    for (const Point& p : d.positions)
        svg += "<circle cx=\"" + num(px(p)) + "\" cy=\"" + num(py(p)) + "\" r=\"" +
               num(style.vertex_radius) + "\"/>\n";
    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace gkbook
