// geom.hpp — exact integer predicates and the layered-drawing validator.
//
// All predicates are decision-exact: cross products are evaluated in 128-bit
// integers, so coordinates up to |x|, |y| <= 2^62 are safe. No floating point.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gkbook/graph.hpp"

namespace gkbook {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { Clockwise, Collinear, CounterClockwise };

// Sign of the cross product (q - p) x (r - p).
inline Orientation orientation(Point p, Point q, Point r) {
    using wide = __int128;
    const wide cross = (wide(q.x) - p.x) * (wide(r.y) - p.y) -
                       (wide(q.y) - p.y) * (wide(r.x) - p.x);
    if (cross > 0) return Orientation::CounterClockwise;
    if (cross < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

struct Segment {
    Point a;
    Point b;
};

enum class ConflictKind {
    ProperCrossing,      // interiors cross at a single point
    CollinearOverlap,    // collinear with a shared portion of positive length
    EndpointInInterior,  // an endpoint of one segment inside the other
    VertexOnEdge,        // a vertex lies on a non-incident edge
    CoincidentVertices,  // two distinct vertices at the same point
};

// Which entities a conflict refers to; fixes the meaning of Conflict::a/b.
enum class ConflictEntities { EdgeEdge, VertexEdge, VertexVertex };

struct Conflict {
    ConflictKind kind{};
    ConflictEntities entities = ConflictEntities::EdgeEdge;
    int a = 0;       // edge index, or vertex id for Vertex* entities
    int b = 0;       // edge index (EdgeEdge, VertexEdge), or vertex id
    int layer = -1;  // shared layer/page id; -1 for vertex-vertex conflicts

    friend bool operator==(const Conflict&, const Conflict&) = default;
    friend auto operator<=>(const Conflict&, const Conflict&) = default;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Conflict> conflicts;
    int layers_used = 0;
};

// Straight-line drawing on several layers: one integer point per vertex,
// one layer id per edge (aligned with the graph's edge order).
struct LayeredDrawing {
    std::vector<Point> positions;
    std::vector<int> edge_layers;
};

// Remaps ids onto 0..L-1 preserving their numeric order; returns L.
inline int normalize_ids(std::vector<int>& ids) {
    std::vector<int> sorted(ids);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& id : ids)
        id = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), id) - sorted.begin());
    return static_cast<int>(sorted.size());
}

namespace detail {

// P collinear with s assumed; true if P lies on the closed segment.
inline bool on_segment(Point p, const Segment& s) {
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
           std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

inline bool contains(std::span<const Point> pts, Point p) {
    for (const Point& q : pts)
        if (q == p) return true;
    return false;
}

// Touching-point classification: p is the single common point.
inline std::optional<ConflictKind> classify_touch(Point p, const Segment& s, const Segment& t,
                                                  std::span<const Point> shared) {
    const bool end_s = (p == s.a) || (p == s.b);
    const bool end_t = (p == t.a) || (p == t.b);
    if (end_s && end_t) {
        if (contains(shared, p)) return std::nullopt;
        return ConflictKind::CoincidentVertices;
    }
    return ConflictKind::EndpointInInterior;
}

}  // namespace detail

// Exact conflict classification for two non-degenerate segments. `shared`
// lists graph-vertex points at which the segments are allowed to meet,
// provided the point is an endpoint of both. Any other contact conflicts;
// collinear overlap conflicts even across a shared vertex.
inline std::optional<ConflictKind> segments_conflict(const Segment& s, const Segment& t,
                                                     std::span<const Point> shared = {}) {
    if (s.a == s.b || t.a == t.b)
        throw std::invalid_argument("segments_conflict: degenerate segment");

    const Orientation o1 = orientation(s.a, s.b, t.a);
    const Orientation o2 = orientation(s.a, s.b, t.b);
    const Orientation o3 = orientation(t.a, t.b, s.a);
    const Orientation o4 = orientation(t.a, t.b, s.b);
    const auto col = Orientation::Collinear;

    if (o1 == col && o2 == col) {
        // Collinear segments: compare along the dominant axis.
        const bool use_x = s.a.x != s.b.x;
        auto coord = [use_x](Point p) { return use_x ? p.x : p.y; };
        auto lo_s = std::min(coord(s.a), coord(s.b)), hi_s = std::max(coord(s.a), coord(s.b));
        auto lo_t = std::min(coord(t.a), coord(t.b)), hi_t = std::max(coord(t.a), coord(t.b));
        const auto lo = std::max(lo_s, lo_t), hi = std::min(hi_s, hi_t);
        if (lo > hi) return std::nullopt;
        if (lo < hi) return ConflictKind::CollinearOverlap;
        // Single touching point; necessarily an endpoint of both.
        const Point p = (coord(s.a) == lo) ? s.a : s.b;
        return detail::classify_touch(p, s, t, shared);
    }

    if (o1 != col && o2 != col && o3 != col && o4 != col) {
        if (o1 != o2 && o3 != o4) return ConflictKind::ProperCrossing;
        return std::nullopt;
    }

    // Non-collinear segments with a zero orientation: at most one touch point.
    if (o1 == col && detail::on_segment(t.a, s)) return detail::classify_touch(t.a, s, t, shared);
    if (o2 == col && detail::on_segment(t.b, s)) return detail::classify_touch(t.b, s, t, shared);
    if (o3 == col && detail::on_segment(s.a, t)) return detail::classify_touch(s.a, s, t, shared);
    if (o4 == col && detail::on_segment(s.b, t)) return detail::classify_touch(s.b, s, t, shared);
    return std::nullopt;
}

// Checks a multi-layer straight-line drawing certificate. Reports every
// same-layer edge pair in conflict, every vertex on a non-incident edge
// (independent of layer), and every coincident vertex pair. Conflicts are
// sorted canonically; layers_used counts distinct layer ids.
inline ValidationReport validate_layered_drawing(const Graph& g, const LayeredDrawing& d) {
    check_graph(g);
    if (static_cast<int>(d.positions.size()) != g.n)
        throw std::invalid_argument("drawing: one position per vertex required");
    if (d.edge_layers.size() != g.edges.size())
        throw std::invalid_argument("drawing: one layer per edge required");

    ValidationReport report;
    {
        std::vector<int> layers(d.edge_layers);
        std::sort(layers.begin(), layers.end());
        layers.erase(std::unique(layers.begin(), layers.end()), layers.end());
        report.layers_used = static_cast<int>(layers.size());
    }

    // Coincident vertices.
    std::vector<int> by_pos(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) by_pos[static_cast<std::size_t>(v)] = v;
    std::sort(by_pos.begin(), by_pos.end(), [&](int a, int b) {
        return d.positions[static_cast<std::size_t>(a)] < d.positions[static_cast<std::size_t>(b)] ||
               (d.positions[static_cast<std::size_t>(a)] == d.positions[static_cast<std::size_t>(b)] && a < b);
    });
    for (std::size_t i = 0; i < by_pos.size();) {
        std::size_t j = i;
        while (j < by_pos.size() && d.positions[static_cast<std::size_t>(by_pos[j])] ==
                                        d.positions[static_cast<std::size_t>(by_pos[i])])
            ++j;
        for (std::size_t a = i; a < j; ++a)
            for (std::size_t b = a + 1; b < j; ++b)
                report.conflicts.push_back({ConflictKind::CoincidentVertices,
                                            ConflictEntities::VertexVertex,
                                            std::min(by_pos[a], by_pos[b]),
                                            std::max(by_pos[a], by_pos[b]), -1});
        i = j;
    }

    const int m = g.edge_count();
    auto segment_of = [&](int e) {
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        return Segment{d.positions[static_cast<std::size_t>(ed.u)],
                       d.positions[static_cast<std::size_t>(ed.v)]};
    };
    auto degenerate = [&](int e) {
        const Segment s = segment_of(e);
        return s.a == s.b;  // already reported as coincident vertices
    };

    // Vertices on non-incident edges, any layer.
    for (int e = 0; e < m; ++e) {
        if (degenerate(e)) continue;
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        const Segment s = segment_of(e);
        for (int v = 0; v < g.n; ++v) {
            if (v == ed.u || v == ed.v) continue;
            const Point p = d.positions[static_cast<std::size_t>(v)];
            if (!detail::on_segment(p, s)) continue;
            if (orientation(s.a, s.b, p) != Orientation::Collinear) continue;
            report.conflicts.push_back({ConflictKind::VertexOnEdge, ConflictEntities::VertexEdge,
                                        v, e, d.edge_layers[static_cast<std::size_t>(e)]});
        }
    }

    // Same-layer edge pairs.
    std::vector<std::vector<int>> by_layer;
    {
        std::vector<int> layer_ids(d.edge_layers);
        const int L = normalize_ids(layer_ids);
        by_layer.resize(static_cast<std::size_t>(L));
        for (int e = 0; e < m; ++e) by_layer[static_cast<std::size_t>(layer_ids[e])].push_back(e);
    }
    for (const auto& layer_edges : by_layer) {
        for (std::size_t i = 0; i < layer_edges.size(); ++i) {
            const int e1 = layer_edges[i];
            if (degenerate(e1)) continue;
            const Edge& a = g.edges[static_cast<std::size_t>(e1)];
            const Segment sa = segment_of(e1);
            for (std::size_t j = i + 1; j < layer_edges.size(); ++j) {
                const int e2 = layer_edges[j];
                if (degenerate(e2)) continue;
                const Edge& b = g.edges[static_cast<std::size_t>(e2)];
                Point shared_buf[2];
                int ns = 0;
                for (int x : {a.u, a.v})
                    if (x == b.u || x == b.v)
                        shared_buf[ns++] = d.positions[static_cast<std::size_t>(x)];
                const auto kind = segments_conflict(sa, segment_of(e2), {shared_buf, static_cast<std::size_t>(ns)});
                if (kind)
                    report.conflicts.push_back({*kind, ConflictEntities::EdgeEdge, e1, e2,
                                                d.edge_layers[static_cast<std::size_t>(e1)]});
            }
        }
    }

    std::sort(report.conflicts.begin(), report.conflicts.end());
    report.valid = report.conflicts.empty();
    return report;
}

}  // namespace gkbook
