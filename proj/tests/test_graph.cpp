#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "gkbook/graph.hpp"

using namespace gkbook;

TEST_CASE("check_graph accepts well-formed graphs") {
    Graph g{3, {{0, 1}, {0, 2}, {1, 2}}};
    REQUIRE_NOTHROW(check_graph(g));
    REQUIRE_NOTHROW(check_graph(Graph{0, {}}));
    REQUIRE_NOTHROW(check_graph(Graph{5, {}}));
}

TEST_CASE("check_graph rejects malformed graphs") {
    REQUIRE_THROWS_AS(check_graph(Graph{2, {{0, 2}}}), std::invalid_argument);
    REQUIRE_THROWS_AS(check_graph(Graph{2, {{-1, 1}}}), std::invalid_argument);
    REQUIRE_THROWS_AS(check_graph(Graph{2, {{1, 1}}}), std::invalid_argument);
    REQUIRE_THROWS_AS(check_graph(Graph{2, {{1, 0}}}), std::invalid_argument);  // u < v storage
    REQUIRE_THROWS_AS(check_graph(Graph{3, {{0, 1}, {0, 1}}}), std::invalid_argument);
    REQUIRE_THROWS_AS(check_graph(Graph{-1, {}}), std::invalid_argument);
}

TEST_CASE("pair_index enumerates pairs lexicographically") {
    for (int k : {2, 3, 5, 9, 12}) {
        int expect = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) REQUIRE(pair_index(k, i, j) == expect++);
        REQUIRE(expect == pair_count(k));
    }
}

TEST_CASE("complete_graph") {
    const Graph k4 = complete_graph(4);
    REQUIRE(k4.n == 4);
    REQUIRE(k4.edge_count() == 6);
    REQUIRE_NOTHROW(check_graph(k4));
    REQUIRE(k4.edges.front() == Edge{0, 1});
    REQUIRE(k4.edges.back() == Edge{2, 3});
    REQUIRE(complete_graph(0).n == 0);
    REQUIRE(complete_graph(1).edge_count() == 0);
    REQUIRE_THROWS_AS(complete_graph(-2), std::invalid_argument);
}

TEST_CASE("subdivide_all_edges splits every edge through a fresh midpoint") {
    const Graph base{4, {{0, 1}, {0, 2}, {1, 3}}};
    const Subdivision sub = subdivide_all_edges(base);
    REQUIRE(sub.graph.n == 4 + 3);
    REQUIRE(sub.graph.edge_count() == 6);
    REQUIRE_NOTHROW(check_graph(sub.graph));
    for (int e = 0; e < base.edge_count(); ++e) {
        const int w = sub.midpoint[static_cast<std::size_t>(e)];
        REQUIRE(w >= base.n);
        const Edge& orig = base.edges[static_cast<std::size_t>(e)];
        const Edge& first = sub.graph.edges[static_cast<std::size_t>(2 * e)];
        const Edge& second = sub.graph.edges[static_cast<std::size_t>(2 * e + 1)];
        REQUIRE(first == Edge{orig.u, w});
        REQUIRE(second == Edge{orig.v, w});
    }
}

TEST_CASE("build_gk shape") {
    for (int k = 2; k <= 12; ++k) {
        const GkGraph gk = build_gk(k);
        REQUIRE(gk.k == k);
        REQUIRE(gk.graph.n == k + pair_count(k));
        REQUIRE(gk.graph.edge_count() == 2 * pair_count(k));
        REQUIRE_NOTHROW(check_gk(gk));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                const int w = gk.doubleton_vertex(i, j);
                REQUIRE(gk.labels[static_cast<std::size_t>(w)] == VertexLabel::doubleton(i, j));
                const auto& [e1, e2] = gk.path_edges(i, j);
                REQUIRE(gk.graph.edges[static_cast<std::size_t>(e1)] == Edge{i, w});
                REQUIRE(gk.graph.edges[static_cast<std::size_t>(e2)] == Edge{j, w});
            }
    }
    REQUIRE_THROWS_AS(build_gk(1), std::invalid_argument);
}

namespace {

// Relabels every vertex of a GkGraph by a permutation, keeping it valid.
GkGraph permuted_gk(const GkGraph& gk, const std::vector<int>& perm) {
    GkGraph out;
    out.k = gk.k;
    out.graph.n = gk.graph.n;
    out.labels.resize(gk.labels.size());
    for (int v = 0; v < gk.graph.n; ++v)
        out.labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
            gk.labels[static_cast<std::size_t>(v)];
    out.graph.edges.reserve(gk.graph.edges.size());
    for (const Edge& e : gk.graph.edges) {
        const int u = perm[static_cast<std::size_t>(e.u)], v = perm[static_cast<std::size_t>(e.v)];
        out.graph.edges.push_back({std::min(u, v), std::max(u, v)});
    }
    out.pair_paths = gk.pair_paths;  // edge indices unchanged
    return out;
}

}  // namespace

TEST_CASE("check_gk accepts non-canonical vertex numbering") {
    const GkGraph gk = build_gk(4);
    std::vector<int> perm(static_cast<std::size_t>(gk.graph.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE_NOTHROW(check_gk(permuted_gk(gk, perm)));
    }
}

TEST_CASE("check_gk rejects structural damage") {
    auto damaged = [] { return build_gk(4); };

    GkGraph wrong_k = damaged();
    wrong_k.k = 5;
    REQUIRE_THROWS_AS(check_gk(wrong_k), std::invalid_argument);

    GkGraph bad_label = damaged();
    bad_label.labels[0] = VertexLabel::singleton(1);  // duplicate singleton
    REQUIRE_THROWS_AS(check_gk(bad_label), std::invalid_argument);

    GkGraph bad_edge = damaged();
    bad_edge.graph.edges[0] = Edge{0, 1};  // joins two singletons
    REQUIRE_THROWS_AS(check_gk(bad_edge), std::invalid_argument);

    GkGraph bad_path = damaged();
    std::swap(bad_path.pair_paths[0][0], bad_path.pair_paths[0][1]);
    REQUIRE_THROWS_AS(check_gk(bad_path), std::invalid_argument);

    GkGraph bad_count = damaged();
    bad_count.graph.edges.pop_back();
    REQUIRE_THROWS_AS(check_gk(bad_count), std::invalid_argument);
}
