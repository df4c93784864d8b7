// graph.hpp — simple undirected graphs and the subdivided-complete-graph family G_k.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkbook {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph: vertices 0..n-1 and an ordered edge list.
// The list order is significant; per-edge arrays (layers, pages) align to it.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Throws std::invalid_argument if g has self-loops, duplicate edges,
// out-of-range endpoints, or an edge with u >= v.
inline void check_graph(const Graph& g) {
    if (g.n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::vector<std::vector<int>> seen(g.n);
    for (const Edge& e : g.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.n || e.v >= g.n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
        if (e.u > e.v) throw std::invalid_argument("graph: edge not stored with u < v");
        for (int w : seen[e.u])
            if (w == e.v) throw std::invalid_argument("graph: duplicate edge");
        seen[e.u].push_back(e.v);
    }
}

// Number of unordered pairs over a k-element set.
constexpr long long pair_count(long long k) { return k * (k - 1) / 2; }

// Rank of pair (i, j), i < j, in lexicographic order over {0..k-1}.
constexpr int pair_index(int k, int i, int j) {
    return i * k - i * (i + 1) / 2 + (j - i - 1);
}

// Complete graph K_k with edges in lexicographic pair order.
// k = 0 yields the empty graph.
inline Graph complete_graph(int k) {
    if (k < 0) throw std::invalid_argument("complete_graph: k must be non-negative");
    Graph g;
    g.n = k;
    g.edges.reserve(static_cast<std::size_t>(pair_count(k)));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.edges.push_back({i, j});
    return g;
}

// Result of subdividing every edge once: the new graph plus, for each
// original edge index e, the id of the midpoint vertex inserted on it.
struct Subdivision {
    Graph graph;
    std::vector<int> midpoint;
};

// Replaces each edge (u, v) by the two-edge path u - w - v with a fresh
// vertex w. Midpoint of original edge e gets id n + e; the new edge list
// holds (u, w) at index 2e and (v, w) at index 2e + 1.
inline Subdivision subdivide_all_edges(const Graph& g) {
    check_graph(g);
    const int m = g.edge_count();
    Subdivision out;
    out.graph.n = g.n + m;
    out.graph.edges.reserve(static_cast<std::size_t>(2) * m);
    out.midpoint.reserve(m);
    for (int e = 0; e < m; ++e) {
        const int w = g.n + e;
        out.midpoint.push_back(w);
        out.graph.edges.push_back({g.edges[e].u, w});
        out.graph.edges.push_back({g.edges[e].v, w});
    }
    return out;
}

// Vertex label over a k-element ground set: a singleton {i} or a
// doubleton {i, j} with i < j. Doubletons mark subdivision vertices.
struct VertexLabel {
    int i = 0;
    int j = -1;  // -1 for singletons

    static VertexLabel singleton(int i) { return {i, -1}; }
    static VertexLabel doubleton(int i, int j) { return {i, j}; }
    bool is_doubleton() const { return j >= 0; }

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// G_k: the complete graph K_k with every edge subdivided once.
// Vertices 0..k-1 carry singleton labels; vertex k + pair_index(k, i, j)
// carries doubleton {i, j}. pair_paths[pair_index(k, i, j)] holds the two
// edge indices of the path v_i - w_ij - v_j, smaller endpoint first.
struct GkGraph {
    Graph graph;
    int k = 0;
    std::vector<VertexLabel> labels;
    std::vector<std::array<int, 2>> pair_paths;

    int doubleton_vertex(int i, int j) const { return k + pair_index(k, i, j); }
    const std::array<int, 2>& path_edges(int i, int j) const {
        return pair_paths[static_cast<std::size_t>(pair_index(k, i, j))];
    }
};

inline GkGraph build_gk(int k) {
    if (k < 2) throw std::invalid_argument("build_gk: k must be at least 2");
    GkGraph gk;
    gk.k = k;
    Subdivision sub = subdivide_all_edges(complete_graph(k));
    gk.graph = std::move(sub.graph);
    gk.labels.reserve(gk.graph.n);
    for (int i = 0; i < k; ++i) gk.labels.push_back(VertexLabel::singleton(i));
    gk.pair_paths.reserve(static_cast<std::size_t>(pair_count(k)));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            gk.labels.push_back(VertexLabel::doubleton(i, j));
            const int e = pair_index(k, i, j);
            gk.pair_paths.push_back({2 * e, 2 * e + 1});
        }
    return gk;
}

// Structural invariants of a (possibly non-canonically indexed) GkGraph:
// counts, label shape, inclusion along every edge, degrees, and agreement
// between pair_paths and the edge list. Throws std::invalid_argument.
inline void check_gk(const GkGraph& gk) {
    const int k = gk.k;
    if (k < 2) throw std::invalid_argument("gk: k must be at least 2");
    check_graph(gk.graph);
    const long long pairs = pair_count(k);
    if (gk.graph.n != k + pairs) throw std::invalid_argument("gk: wrong vertex count");
    if (gk.graph.edge_count() != 2 * pairs) throw std::invalid_argument("gk: wrong edge count");
    if (static_cast<long long>(gk.labels.size()) != gk.graph.n)
        throw std::invalid_argument("gk: one label per vertex required");

    std::vector<int> singleton_of(k, -1);
    std::vector<int> doubleton_of(static_cast<std::size_t>(pairs), -1);
    for (int v = 0; v < gk.graph.n; ++v) {
        const VertexLabel& l = gk.labels[v];
        if (l.is_doubleton()) {
            if (l.i < 0 || l.i >= l.j || l.j >= k)
                throw std::invalid_argument("gk: malformed doubleton label");
            int& slot = doubleton_of[static_cast<std::size_t>(pair_index(k, l.i, l.j))];
            if (slot >= 0) throw std::invalid_argument("gk: repeated doubleton label");
            slot = v;
        } else {
            if (l.i < 0 || l.i >= k) throw std::invalid_argument("gk: malformed singleton label");
            if (singleton_of[l.i] >= 0) throw std::invalid_argument("gk: repeated singleton label");
            singleton_of[l.i] = v;
        }
    }

    std::vector<int> degree(gk.graph.n, 0);
    for (const Edge& e : gk.graph.edges) {
        ++degree[e.u];
        ++degree[e.v];
        const VertexLabel& a = gk.labels[e.u];
        const VertexLabel& b = gk.labels[e.v];
        if (a.is_doubleton() == b.is_doubleton())
            throw std::invalid_argument("gk: edge does not join a singleton to a doubleton");
        const VertexLabel& s = a.is_doubleton() ? b : a;
        const VertexLabel& d = a.is_doubleton() ? a : b;
        if (s.i != d.i && s.i != d.j)
            throw std::invalid_argument("gk: edge without inclusion relation");
    }
    for (int v = 0; v < gk.graph.n; ++v) {
        const int want = gk.labels[v].is_doubleton() ? 2 : k - 1;
        if (degree[v] != want) throw std::invalid_argument("gk: wrong vertex degree");
    }

    if (static_cast<long long>(gk.pair_paths.size()) != pairs)
        throw std::invalid_argument("gk: pair_paths must cover every pair");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const auto& [e1, e2] = gk.pair_paths[static_cast<std::size_t>(pair_index(k, i, j))];
            const int m = gk.graph.edge_count();
            if (e1 < 0 || e2 < 0 || e1 >= m || e2 >= m)
                throw std::invalid_argument("gk: pair_paths edge index out of range");
            const int w = doubleton_of[static_cast<std::size_t>(pair_index(k, i, j))];
            auto other = [&](int e) {
                const Edge& ed = gk.graph.edges[static_cast<std::size_t>(e)];
                if (ed.u != w && ed.v != w)
                    throw std::invalid_argument("gk: pair_paths edge misses its doubleton");
                return ed.u == w ? ed.v : ed.u;
            };
            if (other(e1) != singleton_of[i] || other(e2) != singleton_of[j])
                throw std::invalid_argument("gk: pair_paths endpoints disagree with labels");
        }
}

}  // namespace gkbook
