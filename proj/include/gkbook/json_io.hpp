// json_io.hpp — JSON (de)serialization for graphs, layouts and reports.
//
// File formats:
//   graph    {"n": int, "edges": [[u, v], ...]}
//   gk graph graph fields plus {"k": int, "labels": [{"s": i} | {"d": [i, j]}, ...]}
//   drawing  {"positions": [[x, y], ...], "edge_layers": [int, ...]}
//   book     {"order": [v, ...], "edge_pages": [int, ...]}
//   audit    {"k", "pages_used", "colors_used", "mono_k5": null | [5 ints], "verdict"}
//
// Layer and page ids may be sparse in files; loaders renumber them to a
// dense 0-based range. Malformed input raises FormatError naming the
// offending field.
#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <string>
#include <utility>

#include "json.hpp"

#include "gkbook/book.hpp"
#include "gkbook/geom.hpp"
#include "gkbook/graph.hpp"
#include "gkbook/separation.hpp"

namespace gkbook {

using nlohmann::json;

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Coordinates are capped well below the exact-arithmetic overflow threshold.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 61;

namespace detail {

inline const json& require_field(const json& j, const std::string& name) {
    if (!j.is_object()) throw FormatError("expected a JSON object with field \"" + name + "\"");
    auto it = j.find(name);
    if (it == j.end()) throw FormatError("missing field \"" + name + "\"");
    return *it;
}

inline long long require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
    return j.get<long long>();
}

inline int require_int32(const json& j, const std::string& where) {
    const long long v = require_int(j, where);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw FormatError(where + ": out of range");
    return static_cast<int>(v);
}

inline const json& require_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw FormatError(where + ": expected an array");
    return j;
}

inline std::vector<int> int_array(const json& j, const std::string& where) {
    require_array(j, where);
    std::vector<int> out;
    out.reserve(j.size());
    for (std::size_t t = 0; t < j.size(); ++t)
        out.push_back(require_int32(j[t], where + "[" + std::to_string(t) + "]"));
    return out;
}

}  // namespace detail

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges) edges.push_back({e.u, e.v});
    return {{"n", g.n}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
    Graph g;
    g.n = detail::require_int32(detail::require_field(j, "n"), "n");
    const json& edges = detail::require_array(detail::require_field(j, "edges"), "edges");
    g.edges.reserve(edges.size());
    for (std::size_t t = 0; t < edges.size(); ++t) {
        const std::string where = "edges[" + std::to_string(t) + "]";
        const json& e = edges[t];
        if (!e.is_array() || e.size() != 2) throw FormatError(where + ": expected a pair");
        const int u = detail::require_int32(e[0], where + "[0]");
        const int v = detail::require_int32(e[1], where + "[1]");
        g.edges.push_back({std::min(u, v), std::max(u, v)});
    }
    try {
        check_graph(g);
    } catch (const std::invalid_argument& err) {
        throw FormatError(std::string("edges: ") + err.what());
    }
    return g;
}

inline json gk_to_json(const GkGraph& gk) {
    json j = graph_to_json(gk.graph);
    j["k"] = gk.k;
    json labels = json::array();
    for (const VertexLabel& l : gk.labels) {
        if (l.is_doubleton())
            labels.push_back({{"d", {l.i, l.j}}});
        else
            labels.push_back({{"s", l.i}});
    }
    j["labels"] = std::move(labels);
    return j;
}

inline GkGraph gk_from_json(const json& j) {
    GkGraph gk;
    gk.graph = graph_from_json(j);
    gk.k = detail::require_int32(detail::require_field(j, "k"), "k");
    if (gk.k < 2) throw FormatError("k: must be at least 2");

    const json& labels = detail::require_array(detail::require_field(j, "labels"), "labels");
    gk.labels.reserve(labels.size());
    for (std::size_t t = 0; t < labels.size(); ++t) {
        const std::string where = "labels[" + std::to_string(t) + "]";
        const json& l = labels[t];
        if (!l.is_object() || l.size() != 1 || (!l.contains("s") && !l.contains("d")))
            throw FormatError(where + ": expected {\"s\": i} or {\"d\": [i, j]}");
        if (l.contains("s")) {
            gk.labels.push_back(VertexLabel::singleton(detail::require_int32(l["s"], where + ".s")));
        } else {
            const json& d = l["d"];
            if (!d.is_array() || d.size() != 2) throw FormatError(where + ".d: expected a pair");
            const int i = detail::require_int32(d[0], where + ".d[0]");
            const int jj = detail::require_int32(d[1], where + ".d[1]");
            if (i < 0 || i >= jj || jj >= gk.k) throw FormatError(where + ".d: not a valid pair");
            gk.labels.push_back(VertexLabel::doubleton(i, jj));
        }
    }
    if (static_cast<long long>(gk.labels.size()) != gk.graph.n)
        throw FormatError("labels: one label per vertex required");

    // Recover pair_paths from the edge list; check_gk verifies the rest.
    gk.pair_paths.assign(static_cast<std::size_t>(pair_count(gk.k)), {-1, -1});
    for (int e = 0; e < gk.graph.edge_count(); ++e) {
        const Edge& ed = gk.graph.edges[static_cast<std::size_t>(e)];
        const VertexLabel& a = gk.labels[static_cast<std::size_t>(ed.u)];
        const VertexLabel& b = gk.labels[static_cast<std::size_t>(ed.v)];
        if (a.is_doubleton() == b.is_doubleton())
            throw FormatError("edges[" + std::to_string(e) + "]: must join a singleton to a doubleton");
        const VertexLabel& s = a.is_doubleton() ? b : a;
        const VertexLabel& d = a.is_doubleton() ? a : b;
        if (s.i != d.i && s.i != d.j)
            throw FormatError("edges[" + std::to_string(e) + "]: endpoint labels unrelated");
        auto& path = gk.pair_paths[static_cast<std::size_t>(pair_index(gk.k, d.i, d.j))];
        path[s.i == d.i ? 0 : 1] = e;
    }
    try {
        check_gk(gk);
    } catch (const std::invalid_argument& err) {
        throw FormatError(std::string("labels: ") + err.what());
    }
    return gk;
}

inline json drawing_to_json(const LayeredDrawing& d) {
    json positions = json::array();
    for (const Point& p : d.positions) positions.push_back({p.x, p.y});
    return {{"positions", std::move(positions)}, {"edge_layers", d.edge_layers}};
}

inline LayeredDrawing drawing_from_json(const json& j) {
    LayeredDrawing d;
    const json& positions =
        detail::require_array(detail::require_field(j, "positions"), "positions");
    d.positions.reserve(positions.size());
    for (std::size_t t = 0; t < positions.size(); ++t) {
        const std::string where = "positions[" + std::to_string(t) + "]";
        const json& p = positions[t];
        if (!p.is_array() || p.size() != 2) throw FormatError(where + ": expected [x, y]");
        Point pt{detail::require_int(p[0], where + "[0]"), detail::require_int(p[1], where + "[1]")};
        if (pt.x < -kMaxCoordinate || pt.x > kMaxCoordinate || pt.y < -kMaxCoordinate ||
            pt.y > kMaxCoordinate)
            throw FormatError(where + ": coordinate out of range");
        d.positions.push_back(pt);
    }
    d.edge_layers = detail::int_array(detail::require_field(j, "edge_layers"), "edge_layers");
    for (std::size_t t = 0; t < d.edge_layers.size(); ++t)
        if (d.edge_layers[t] < 0)
            throw FormatError("edge_layers[" + std::to_string(t) + "]: must be non-negative");
    normalize_ids(d.edge_layers);
    return d;
}

inline json book_to_json(const BookEmbedding& be) {
    return {{"order", be.order}, {"edge_pages", be.edge_pages}};
}

inline BookEmbedding book_from_json(const json& j) {
    BookEmbedding be;
    be.order = detail::int_array(detail::require_field(j, "order"), "order");
    be.edge_pages = detail::int_array(detail::require_field(j, "edge_pages"), "edge_pages");
    for (std::size_t t = 0; t < be.edge_pages.size(); ++t)
        if (be.edge_pages[t] < 0)
            throw FormatError("edge_pages[" + std::to_string(t) + "]: must be non-negative");
    normalize_ids(be.edge_pages);
    return be;
}

inline const char* to_string(ConflictKind kind) {
    switch (kind) {
        case ConflictKind::ProperCrossing: return "proper_crossing";
        case ConflictKind::CollinearOverlap: return "collinear_overlap";
        case ConflictKind::EndpointInInterior: return "endpoint_in_interior";
        case ConflictKind::VertexOnEdge: return "vertex_on_edge";
        case ConflictKind::CoincidentVertices: return "coincident_vertices";
    }
    return "unknown";
}

inline const char* to_string(ConflictEntities entities) {
    switch (entities) {
        case ConflictEntities::EdgeEdge: return "edge_edge";
        case ConflictEntities::VertexEdge: return "vertex_edge";
        case ConflictEntities::VertexVertex: return "vertex_vertex";
    }
    return "unknown";
}

inline const char* to_string(AuditVerdict verdict) {
    return verdict == AuditVerdict::Contradiction ? "contradiction" : "consistent";
}

// layers_key is "layers_used" for drawings and "pages_used" for books.
inline json validation_report_to_json(const ValidationReport& report,
                                      const std::string& layers_key) {
    json conflicts = json::array();
    for (const Conflict& c : report.conflicts)
        conflicts.push_back({{"kind", to_string(c.kind)},
                             {"entities", to_string(c.entities)},
                             {"a", c.a},
                             {"b", c.b},
                             {"layer", c.layer}});
    return {{"valid", report.valid}, {layers_key, report.layers_used},
            {"conflicts", std::move(conflicts)}};
}

inline json audit_to_json(const AuditReport& report) {
    json mono = nullptr;
    if (report.mono_k5) mono = std::vector<int>(report.mono_k5->begin(), report.mono_k5->end());
    return {{"k", report.k},
            {"pages_used", report.pages_used},
            {"colors_used", report.colors_used},
            {"mono_k5", std::move(mono)},
            {"verdict", to_string(report.verdict)}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw FormatError(path + ": " + err.what());
    }
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << j.dump() << '\n';
}

}  // namespace gkbook
