// book.hpp — book embeddings: chord interleaving, validation, and the
// exact convex realization that bridges to the layered-drawing model.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "gkbook/geom.hpp"
#include "gkbook/graph.hpp"

namespace gkbook {

// Circular vertex order (order[pos] = vertex id, read clockwise) plus a
// page id per edge, aligned with the graph's edge order.
struct BookEmbedding {
    std::vector<int> order;
    std::vector<int> edge_pages;

    int pages_used() const {
        std::vector<int> p(edge_pages);
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        return static_cast<int>(p.size());
    }
};

inline bool is_permutation_of_range(std::span<const int> order) {
    std::vector<char> seen(order.size(), 0);
    for (int v : order) {
        if (v < 0 || v >= static_cast<int>(order.size()) || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

namespace detail {

// Chords given by circular positions; endpoints strictly alternate?
inline bool positions_interleave(int a1, int b1, int a2, int b2) {
    if (a1 > b1) std::swap(a1, b1);
    const bool in1 = a1 < a2 && a2 < b1;
    const bool in2 = a1 < b2 && b2 < b1;
    return in1 != in2;
}

}  // namespace detail

// True iff the endpoints of e1 and e2 strictly alternate around `order`.
// Edges sharing an endpoint never interleave. Identical edges are rejected.
inline bool chords_interleave(std::span<const int> order, Edge e1, Edge e2) {
    if (e1.u == e1.v || e2.u == e2.v)
        throw std::invalid_argument("chords_interleave: degenerate edge");
    if (Edge{std::min(e1.u, e1.v), std::max(e1.u, e1.v)} ==
        Edge{std::min(e2.u, e2.v), std::max(e2.u, e2.v)})
        throw std::invalid_argument("chords_interleave: identical edges");
    if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) return false;
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    for (int v : {e1.u, e1.v, e2.u, e2.v})
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] < 0)
            throw std::invalid_argument("chords_interleave: endpoint not in order");
    return detail::positions_interleave(pos[static_cast<std::size_t>(e1.u)], pos[static_cast<std::size_t>(e1.v)],
                                        pos[static_cast<std::size_t>(e2.u)], pos[static_cast<std::size_t>(e2.v)]);
}

namespace detail {

// Nesting check for the chords of one page, given as (lo, hi) position
// intervals. Non-crossing chord sets nest like balanced brackets: closing
// chords must sit on top of the stack.  Returns false as soon as some pair
// on the page must interleave (the caller then enumerates pairs).
inline bool page_nests(std::span<const std::pair<int, int>> intervals, int n,
                       std::vector<int>& scratch) {
    std::vector<std::vector<int>> open(static_cast<std::size_t>(n)), close(static_cast<std::size_t>(n));
    for (int c = 0; c < static_cast<int>(intervals.size()); ++c) {
        open[static_cast<std::size_t>(intervals[static_cast<std::size_t>(c)].first)].push_back(c);
        close[static_cast<std::size_t>(intervals[static_cast<std::size_t>(c)].second)].push_back(c);
    }
    scratch.clear();
    auto& stack = scratch;
    for (int p = 0; p < n; ++p) {
        auto& closing = close[static_cast<std::size_t>(p)];
        std::sort(closing.begin(), closing.end(), [&](int a, int b) {
            return intervals[static_cast<std::size_t>(a)].first > intervals[static_cast<std::size_t>(b)].first;
        });
        for (int c : closing) {
            if (stack.empty() || stack.back() != c) return false;
            stack.pop_back();
        }
        auto& opening = open[static_cast<std::size_t>(p)];
        std::sort(opening.begin(), opening.end(), [&](int a, int b) {
            return intervals[static_cast<std::size_t>(a)].second > intervals[static_cast<std::size_t>(b)].second;
        });
        for (int c : opening) stack.push_back(c);
    }
    return true;
}

}  // namespace detail

// Checks a book-embedding certificate: conflicts are exactly the same-page
// edge pairs whose endpoints interleave in the circular order. layers_used
// reports the number of distinct page ids.
inline ValidationReport validate_book_embedding(const Graph& g, const BookEmbedding& be) {
    check_graph(g);
    if (static_cast<int>(be.order.size()) != g.n)
        throw std::invalid_argument("book: order must list every vertex");
    if (be.edge_pages.size() != g.edges.size())
        throw std::invalid_argument("book: one page per edge required");
    if (!is_permutation_of_range(be.order))
        throw std::invalid_argument("book: order is not a permutation");

    ValidationReport report;
    report.layers_used = be.pages_used();

    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (int p = 0; p < g.n; ++p) pos[static_cast<std::size_t>(be.order[static_cast<std::size_t>(p)])] = p;

    std::vector<int> page_ids(be.edge_pages);
    const int pages = normalize_ids(page_ids);
    std::vector<std::vector<int>> by_page(static_cast<std::size_t>(pages));
    for (int e = 0; e < g.edge_count(); ++e)
        by_page[static_cast<std::size_t>(page_ids[static_cast<std::size_t>(e)])].push_back(e);

    auto interval_of = [&](int e) {
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        int a = pos[static_cast<std::size_t>(ed.u)], b = pos[static_cast<std::size_t>(ed.v)];
        if (a > b) std::swap(a, b);
        return std::pair<int, int>{a, b};
    };

    std::vector<int> scratch;
    for (const auto& page_edges : by_page) {
        std::vector<std::pair<int, int>> intervals;
        intervals.reserve(page_edges.size());
        for (int e : page_edges) intervals.push_back(interval_of(e));
        if (detail::page_nests(intervals, g.n, scratch)) continue;
        // The page provably contains an interleaving pair; enumerate them all.
        for (std::size_t i = 0; i < page_edges.size(); ++i)
            for (std::size_t j = i + 1; j < page_edges.size(); ++j) {
                const Edge& a = g.edges[static_cast<std::size_t>(page_edges[i])];
                const Edge& b = g.edges[static_cast<std::size_t>(page_edges[j])];
                if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
                const auto [a1, b1] = intervals[i];
                const auto [a2, b2] = intervals[j];
                if (detail::positions_interleave(a1, b1, a2, b2))
                    report.conflicts.push_back(
                        {ConflictKind::ProperCrossing, ConflictEntities::EdgeEdge,
                         std::min(page_edges[i], page_edges[j]), std::max(page_edges[i], page_edges[j]),
                         be.edge_pages[static_cast<std::size_t>(page_edges[i])]});
            }
    }

    std::sort(report.conflicts.begin(), report.conflicts.end());
    report.valid = report.conflicts.empty();
    return report;
}

/// Realizes a book embedding geometrically: the vertex at circular position
// t goes to the integer convex-position point (t, t^2) and pages become
// layers. The geometric conflict set of the result equals the interleaving
// conflict set pair for pair.
inline LayeredDrawing embed_on_circle(const Graph& g, const BookEmbedding& be) {
    check_graph(g);
    if (static_cast<int>(be.order.size()) != g.n)
        throw std::invalid_argument("book: order must list every vertex");
    if (be.edge_pages.size() != g.edges.size())
        throw std::invalid_argument("book: one page per edge required");
    if (!is_permutation_of_range(be.order))
        throw std::invalid_argument("book: order is not a permutation");
    LayeredDrawing d;
    d.positions.resize(static_cast<std::size_t>(g.n));
    for (int t = 0; t < g.n; ++t) {
        const auto v = static_cast<std::size_t>(be.order[static_cast<std::size_t>(t)]);
        d.positions[v] = Point{t, static_cast<std::int64_t>(t) * t};
    }
    d.edge_layers = be.edge_pages;
    return d;
}

}  // namespace gkbook
