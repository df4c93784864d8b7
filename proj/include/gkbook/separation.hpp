// separation.hpp — consistency audit for book embeddings of G_k.
//
// Every pair {i, j} of originals contributes a two-edge path through its
// subdivision point, so a book embedding assigns the pair an unordered set of
// at most two pages. If five originals had all ten of their pairs on one and
// the same page set, restricting the embedding to those five originals and
// their ten subdivision points would yield a two-page book embedding of G_5.
// Two pages force planarity, while G_5 contains a K_5 subdivision, so a valid
// embedding can never produce such a quintuple. The audit hunts for one and
// reports Contradiction when it exists (which also certifies that the input
// embedding cannot be valid) and Consistent otherwise.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gkbook/book.hpp"
#include "gkbook/graph.hpp"

namespace gkbook {

// Unordered page pair per K_k pair, indexed like pair_index. A pair whose two
// half-edges share a single page a is widened to {a, a'} with a' the smallest
// other page id, so every color is a genuine 2-subset whenever two or more
// pages exist; the widened set still covers the pages the pair touches.
struct EdgeColoring {
    int k = 0;
    std::vector<std::pair<int, int>> colors;
    int pages_used = 0;

    int colors_used() const {
        auto sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        return static_cast<int>(sorted.size());
    }
};

inline EdgeColoring page_pair_coloring(const GkGraph& gk, const BookEmbedding& be) {
    if (static_cast<int>(be.order.size()) != gk.graph.n ||
        be.edge_pages.size() != gk.graph.edges.size())
        throw std::invalid_argument("page_pair_coloring: embedding does not match graph");

    std::vector<int> pages = be.edge_pages;
    const int used = normalize_ids(pages);

    EdgeColoring coloring;
    coloring.k = gk.k;
    coloring.pages_used = used;
    const int pairs = static_cast<int>(pair_count(gk.k));
    coloring.colors.resize(static_cast<std::size_t>(pairs));
    for (int e = 0; e < pairs; ++e) {
        int p1 = pages[static_cast<std::size_t>(2 * e)];
        int p2 = pages[static_cast<std::size_t>(2 * e + 1)];
        if (p1 == p2 && used >= 2) p2 = p1 == 0 ? 1 : 0;
        coloring.colors[static_cast<std::size_t>(e)] = std::minmax(p1, p2);
    }
    return coloring;
}

namespace detail {

// Lexicographically least `size`-clique of the graph given by adjacency
// lists (sorted ascending), or nullopt. Vertices are tried in ascending
// order, so the first completed clique is the least one.
inline bool least_clique_extend(const std::vector<std::vector<int>>& adj, std::vector<int>& clique,
                                const std::vector<int>& cands, int size) {
    if (static_cast<int>(clique.size()) == size) return true;
    const int need = size - static_cast<int>(clique.size());
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
        if (static_cast<int>(cands.size() - idx) < need) return false;
        const int v = cands[idx];
        const auto& nv = adj[static_cast<std::size_t>(v)];
        std::vector<int> next;
        std::set_intersection(cands.begin() + static_cast<std::ptrdiff_t>(idx) + 1, cands.end(),
                              nv.begin(), nv.end(), std::back_inserter(next));
        if (static_cast<int>(next.size()) < need - 1) continue;
        clique.push_back(v);
        if (least_clique_extend(adj, clique, next, size)) return true;
        clique.pop_back();
    }
    return false;
}

inline std::optional<std::vector<int>> least_clique(const std::vector<std::vector<int>>& adj,
                                                    const std::vector<int>& support, int size) {
    std::vector<int> clique;
    if (least_clique_extend(adj, clique, support, size)) return clique;
    return std::nullopt;
}

}  // namespace detail

// Least vertex set (lexicographically, across all color classes) spanning a
// monochromatic complete subgraph on `size` originals, or nullopt.
inline std::optional<std::vector<int>> find_monochromatic_clique(const EdgeColoring& coloring,
                                                                 int size) {
    if (size < 1) throw std::invalid_argument("find_monochromatic_clique: size must be positive");
    const int k = coloring.k;
    if (size > k) return std::nullopt;
    if (size == 1) return std::vector<int>{0};

    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> classes;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            classes[coloring.colors[static_cast<std::size_t>(pair_index(k, i, j))]].emplace_back(i,
                                                                                                 j);

    std::optional<std::vector<int>> best;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
    std::vector<int> degree(static_cast<std::size_t>(k));
    for (const auto& [color, members] : classes) {
        if (static_cast<long long>(members.size()) < pair_count(size)) continue;
        for (auto& lst : adj) lst.clear();
        std::fill(degree.begin(), degree.end(), 0);
        for (const auto& [i, j] : members) {
            adj[static_cast<std::size_t>(i)].push_back(j);
            adj[static_cast<std::size_t>(j)].push_back(i);
        }
        // Core reduction: a clique member needs size-1 neighbors in class.
        std::vector<char> alive(static_cast<std::size_t>(k), 0);
        for (int v = 0; v < k; ++v) {
            std::sort(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
            degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
            alive[static_cast<std::size_t>(v)] = degree[static_cast<std::size_t>(v)] > 0;
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < k; ++v) {
                if (!alive[static_cast<std::size_t>(v)] ||
                    degree[static_cast<std::size_t>(v)] >= size - 1)
                    continue;
                alive[static_cast<std::size_t>(v)] = 0;
                changed = true;
                for (int w : adj[static_cast<std::size_t>(v)])
                    if (alive[static_cast<std::size_t>(w)]) --degree[static_cast<std::size_t>(w)];
            }
        }
        std::vector<int> support;
        for (int v = 0; v < k; ++v)
            if (alive[static_cast<std::size_t>(v)]) support.push_back(v);
        if (static_cast<int>(support.size()) < size) continue;
        for (auto& lst : adj) {
            lst.erase(std::remove_if(lst.begin(), lst.end(),
                                     [&](int w) { return !alive[static_cast<std::size_t>(w)]; }),
                      lst.end());
        }
        auto found = detail::least_clique(adj, support, size);
        if (found && (!best || *found < *best)) best = std::move(found);
    }
    return best;
}

enum class AuditVerdict { Consistent, Contradiction };

// G_5 embedding induced by five originals of a larger embedding, with the
// witness pages relabeled to 0 and 1.
struct SubEmbedding {
    std::array<int, 5> originals{};
    BookEmbedding embedding;
    bool valid = false;
};

struct AuditReport {
    int k = 0;
    bool input_valid = false;
    int pages_used = 0;
    int colors_used = 0;
    std::optional<std::array<int, 5>> mono_k5;
    std::optional<SubEmbedding> sub;
    AuditVerdict verdict = AuditVerdict::Consistent;
};

namespace detail {

inline SubEmbedding extract_sub_embedding(const GkGraph& gk, const BookEmbedding& be,
                                          const std::array<int, 5>& witness,
                                          std::pair<int, int> color) {
    const int k = gk.k;
    std::vector<int> rank(static_cast<std::size_t>(k), -1);
    for (int t = 0; t < 5; ++t) rank[static_cast<std::size_t>(witness[static_cast<std::size_t>(t)])] = t;

    const GkGraph g5 = build_gk(5);
    SubEmbedding sub;
    sub.originals = witness;
    sub.embedding.order.reserve(static_cast<std::size_t>(g5.graph.n));
    for (int v : be.order) {
        const VertexLabel& lab = gk.labels[static_cast<std::size_t>(v)];
        if (!lab.is_doubleton()) {
            const int r = rank[static_cast<std::size_t>(lab.i)];
            if (r >= 0) sub.embedding.order.push_back(r);
        } else {
            const int ri = rank[static_cast<std::size_t>(lab.i)];
            const int rj = rank[static_cast<std::size_t>(lab.j)];
            if (ri >= 0 && rj >= 0)
                sub.embedding.order.push_back(g5.doubleton_vertex(std::min(ri, rj), std::max(ri, rj)));
        }
    }

    std::vector<int> pages = be.edge_pages;
    normalize_ids(pages);
    auto map_page = [&](int p) { return color.first == color.second ? 0 : (p == color.first ? 0 : 1); };
    sub.embedding.edge_pages.resize(g5.graph.edges.size());
    for (int s = 0; s < 5; ++s)
        for (int t = s + 1; t < 5; ++t) {
            const int big = pair_index(k, witness[static_cast<std::size_t>(s)],
                                       witness[static_cast<std::size_t>(t)]);
            const int small = pair_index(5, s, t);
            sub.embedding.edge_pages[static_cast<std::size_t>(2 * small)] =
                map_page(pages[static_cast<std::size_t>(2 * big)]);
            sub.embedding.edge_pages[static_cast<std::size_t>(2 * small + 1)] =
                map_page(pages[static_cast<std::size_t>(2 * big + 1)]);
        }
    sub.valid = validate_book_embedding(g5.graph, sub.embedding).valid;
    return sub;
}

}  // namespace detail

inline AuditReport separation_audit(const GkGraph& gk, const BookEmbedding& be) {
    check_gk(gk);
    AuditReport report;
    report.k = gk.k;
    report.input_valid = validate_book_embedding(gk.graph, be).valid;
    report.pages_used = be.pages_used();

    const EdgeColoring coloring = page_pair_coloring(gk, be);
    report.colors_used = coloring.colors_used();

    if (auto witness = find_monochromatic_clique(coloring, 5)) {
        std::array<int, 5> w{};
        std::copy(witness->begin(), witness->end(), w.begin());
        report.mono_k5 = w;
        report.sub = detail::extract_sub_embedding(
            gk, be, w, coloring.colors[static_cast<std::size_t>(pair_index(gk.k, w[0], w[1]))]);
        report.verdict = AuditVerdict::Contradiction;
    } else {
        report.verdict = AuditVerdict::Consistent;
    }
    return report;
}

}  // namespace gkbook
