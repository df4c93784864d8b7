// solver.hpp — exact book-thickness decision and search for small graphs.
//
// The decision procedure enumerates canonical circular orders (vertex 0
// pinned at position 0, reflections quotiented by requiring
// order[1] < order[n-1]) depth first, pruning any prefix whose fully-placed
// edges already admit no p-page assignment. Deterministic: branches are
// explored in increasing vertex order, so a Yes always returns the
// lexicographically least witness order.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "gkbook/book.hpp"
#include "gkbook/graph.hpp"
#include "gkbook/planarity.hpp"

namespace gkbook {

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;  // ample for n <= 10
};

enum class SolveStatus { Yes, No, Unknown };

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<BookEmbedding> embedding;  // engaged iff status == Yes
    std::uint64_t nodes_expanded = 0;
};

enum class LowerBoundReason { PlanarityViolation, OuterplanarEdgeBound, ExhaustiveSearch };

// Evidence for one side of a book-thickness bound.
using BtCertificate = std::variant<BookEmbedding, LowerBoundReason>;

namespace detail {

// p-colorability of the interleaving-conflict graph among the edges whose
// endpoints are all placed; the assignment is recoverable for a full order.
class PageAssigner {
  public:
    PageAssigner(const Graph& g, int pages) : g_(g), pages_(pages) {}

    // pos[v] >= 0 for placed vertices. Returns false when the fully-placed
    // edges cannot be spread over `pages_` conflict-free pages; no completion
    // of the prefix can fix that, so the caller may prune.
    bool feasible(const std::vector<int>& pos, std::vector<int>* out = nullptr) {
        ready_.clear();
        for (int e = 0; e < g_.edge_count(); ++e) {
            const Edge& ed = g_.edges[static_cast<std::size_t>(e)];
            if (pos[static_cast<std::size_t>(ed.u)] >= 0 && pos[static_cast<std::size_t>(ed.v)] >= 0)
                ready_.push_back(e);
        }
        const int r = static_cast<int>(ready_.size());
        adj_.assign(static_cast<std::size_t>(r), {});
        for (int i = 0; i < r; ++i) {
            const Edge& a = edge_at(i);
            for (int j = i + 1; j < r; ++j) {
                const Edge& b = edge_at(j);
                if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
                if (positions_interleave(pos[static_cast<std::size_t>(a.u)],
                                         pos[static_cast<std::size_t>(a.v)],
                                         pos[static_cast<std::size_t>(b.u)],
                                         pos[static_cast<std::size_t>(b.v)])) {
                    adj_[static_cast<std::size_t>(i)].push_back(j);
                    adj_[static_cast<std::size_t>(j)].push_back(i);
                }
            }
        }
        // Largest conflict degree first; ties by edge index.
        order_.resize(static_cast<std::size_t>(r));
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            const auto da = adj_[static_cast<std::size_t>(a)].size();
            const auto db = adj_[static_cast<std::size_t>(b)].size();
            return da != db ? da > db : a < b;
        });
        color_.assign(static_cast<std::size_t>(r), -1);
        if (!color_from(0)) return false;
        if (out) {
            out->assign(g_.edges.size(), 0);
            for (int i = 0; i < r; ++i)
                (*out)[static_cast<std::size_t>(ready_[static_cast<std::size_t>(i)])] =
                    color_[static_cast<std::size_t>(i)];
        }
        return true;
    }

  private:
    const Edge& edge_at(int i) const {
        return g_.edges[static_cast<std::size_t>(ready_[static_cast<std::size_t>(i)])];
    }

    bool color_from(int idx) {
        if (idx == static_cast<int>(order_.size())) return true;
        const int v = order_[static_cast<std::size_t>(idx)];
        for (int c = 0; c < pages_; ++c) {
            bool clash = false;
            for (int w : adj_[static_cast<std::size_t>(v)])
                if (color_[static_cast<std::size_t>(w)] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color_[static_cast<std::size_t>(v)] = c;
            if (color_from(idx + 1)) return true;
            color_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const Graph& g_;
    int pages_;
    std::vector<int> ready_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> order_;
    std::vector<int> color_;
};

}  // namespace detail

// Can g be embedded in a book with at most p pages?  No is exhaustive over
// canonical circular orders; Unknown only when the node budget runs out
// (never for n <= 8 under the default budget).
inline SolveResult book_thickness_at_most(const Graph& g, int p, SearchBudget budget = {}) {
    if (p < 1) throw std::invalid_argument("book_thickness_at_most: p must be positive");
    check_graph(g);
    const int n = g.n;

    SolveResult result;
    if (n <= 2 || g.edges.empty()) {
        BookEmbedding be;
        be.order.resize(static_cast<std::size_t>(n));
        std::iota(be.order.begin(), be.order.end(), 0);
        be.edge_pages.assign(g.edges.size(), 0);
        result.status = SolveStatus::Yes;
        result.embedding = std::move(be);
        result.nodes_expanded = 1;
        return result;
    }

    detail::PageAssigner assigner(g, p);
    std::vector<int> order(static_cast<std::size_t>(n), -1);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    order[0] = 0;
    pos[0] = 0;
    used[0] = 1;

    bool exhausted = false;
    std::vector<int> pages;

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (result.nodes_expanded >= budget.max_nodes) {
            exhausted = true;
            return false;
        }
        ++result.nodes_expanded;
        if (depth == n) return assigner.feasible(pos, &pages);
        for (int v = 1; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (depth == n - 1 && order[1] >= v) continue;  // reflection quotient
            order[static_cast<std::size_t>(depth)] = v;
            pos[static_cast<std::size_t>(v)] = depth;
            used[static_cast<std::size_t>(v)] = 1;
            const bool found = assigner.feasible(pos) && self(self, depth + 1);
            pos[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(v)] = 0;
            if (found) return true;
            order[static_cast<std::size_t>(depth)] = -1;
            if (exhausted) return false;
        }
        return false;
    };

    if (dfs(dfs, 1)) {
        BookEmbedding be;
        be.order = order;
        be.edge_pages = pages;
        normalize_ids(be.edge_pages);
        result.status = SolveStatus::Yes;
        result.embedding = std::move(be);
    } else {
        result.status = exhausted ? SolveStatus::Unknown : SolveStatus::No;
    }
    return result;
}

struct ExactResult {
    int value = 0;
    BookEmbedding embedding;                     // witnesses bt <= value
    std::optional<LowerBoundReason> minimality;  // how value - 1 was excluded
    std::uint64_t nodes_expanded = 0;
};

// Distinguishes a solved instance from a definite "more than max_p pages"
// and from a budget-exhausted Unknown.
struct ExactOutcome {
    enum class Kind { Solved, ExceedsMaxPages, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<ExactResult> result;  // engaged iff kind == Solved
};

// Page count forced by each page being outerplanar (at most 2n - 3 edges).
inline int outerplanar_page_bound(const Graph& g) {
    if (g.edges.empty()) return 0;
    const long long cap = std::max(1LL, 2LL * g.n - 3);
    return static_cast<int>((g.edge_count() + cap - 1) / cap);
}

// Smallest p <= max_p admitting a p-page embedding, with the witness and the
// reason p - 1 is impossible.
inline ExactOutcome book_thickness_exact(const Graph& g, int max_p, SearchBudget budget = {}) {
    if (max_p < 1) throw std::invalid_argument("book_thickness_exact: max_p must be positive");
    check_graph(g);

    int start = 1;
    std::optional<LowerBoundReason> reason;
    if (const int ob = outerplanar_page_bound(g); ob > start) {
        start = ob;
        reason = LowerBoundReason::OuterplanarEdgeBound;
    }
    // A two-page book embedding is a planar drawing, so nonplanar => bt >= 3.
    if (start < 3 && !is_planar(g)) {
        start = 3;
        reason = LowerBoundReason::PlanarityViolation;
    }

    if (start > max_p) return {ExactOutcome::Kind::ExceedsMaxPages, std::nullopt};

    std::uint64_t nodes = 0;
    for (int p = start; p <= max_p; ++p) {
        SearchBudget remaining{budget.max_nodes - std::min(budget.max_nodes, nodes)};
        if (remaining.max_nodes == 0) return {ExactOutcome::Kind::Unknown, std::nullopt};
        SolveResult r = book_thickness_at_most(g, p, remaining);
        nodes += r.nodes_expanded;
        if (r.status == SolveStatus::Unknown) return {ExactOutcome::Kind::Unknown, std::nullopt};
        if (r.status == SolveStatus::Yes) {
            std::optional<LowerBoundReason> minimality;
            if (p > start)
                minimality = LowerBoundReason::ExhaustiveSearch;
            else if (p > 1)
                minimality = reason;
            return {ExactOutcome::Kind::Solved,
                    ExactResult{p, std::move(*r.embedding), minimality, nodes}};
        }
    }
    return {ExactOutcome::Kind::ExceedsMaxPages, std::nullopt};
}

}  // namespace gkbook
