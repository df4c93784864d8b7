// layouts.hpp — constructive layouts for the subdivided complete graph G_k.
//
// theorem1_layout: a two-layer straight-line drawing. Original vertex i sits
// at (i, i+1) and the subdivision point of {i, j} at (j+1, i). Every layer-0
// segment runs from (i, i+1) down to (j+1, i), so its interior stays in the
// open horizontal strip i < y < i+1; segments of distinct pairs with the same
// i share only the endpoint (i, i+1) and have distinct slopes. Layer 1 is the
// mirror argument on vertical strips j < x < j+1. All vertex coordinates are
// integers, so no vertex can sit on a segment interior either.
//
// sqrt_book_layout: a book embedding of G_k on roughly 2*sqrt(k) pages.
// Originals are grouped into blocks of b consecutive indices. The spine
// order is block 0's originals, then the transfer points homed to block 0
// (home = block of the smaller endpoint), then block 1, and so on. The edge
// from the smaller endpoint u to its transfer point stays inside u's block
// arc and goes on page slot(u); edges with the same slot live in disjoint
// arcs, so each slot page is conflict-free. The edge from the transfer point
// to the larger endpoint v goes on the home block's page. Within one home
// arc those chords nest provided same-block chords precede cross-block ones
// and far endpoints appear in decreasing order: for two same-block chords
// (v descending toward the arc) and for two cross-block chords (w advancing
// while v retreats) the intervals nest, and a same-block chord closing before
// a cross-block chord opens cannot alternate with it.
#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gkbook/book.hpp"
#include "gkbook/geom.hpp"
#include "gkbook/graph.hpp"

namespace gkbook {

inline LayeredDrawing theorem1_layout(int k) {
    const GkGraph gk = build_gk(k);
    LayeredDrawing d;
    d.positions.resize(static_cast<std::size_t>(gk.graph.n));
    for (int i = 0; i < k; ++i) d.positions[static_cast<std::size_t>(i)] = {i, i + 1};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            d.positions[static_cast<std::size_t>(gk.doubleton_vertex(i, j))] = {j + 1, i};
    d.edge_layers.resize(gk.graph.edges.size());
    for (int e = 0; e < static_cast<int>(pair_count(k)); ++e) {
        d.edge_layers[static_cast<std::size_t>(2 * e)] = 0;      // smaller endpoint side
        d.edge_layers[static_cast<std::size_t>(2 * e + 1)] = 1;  // larger endpoint side
    }
    return d;
}

// Partition of originals 0..k-1 into consecutive blocks of size b.
struct BlockScheme {
    int k = 0;
    int b = 1;

    BlockScheme(int k_, int b_) : k(k_), b(b_) {
        if (k < 1) throw std::invalid_argument("BlockScheme: k must be positive");
        if (b < 1 || b > k) throw std::invalid_argument("BlockScheme: block size out of range");
    }

    int block_of(int v) const { return v / b; }
    int slot_of(int v) const { return v % b; }
    int block_count() const { return (k + b - 1) / b; }
    int block_begin(int blk) const { return blk * b; }
    int block_end(int blk) const { return std::min(k, (blk + 1) * b); }
};

inline int default_block_size(int k) {
    int b = static_cast<int>(std::sqrt(static_cast<double>(k)));
    while (b * b < k) ++b;
    while (b > 1 && (b - 1) * (b - 1) >= k) --b;
    return b;
}

// Page count the construction never exceeds (before normalization).
inline int sqrt_page_bound(int k, int b) { return b + (k + b - 1) / b; }

inline BookEmbedding sqrt_book_layout(int k, std::optional<int> block_size = std::nullopt) {
    const GkGraph gk = build_gk(k);
    const BlockScheme scheme(k, block_size.value_or(default_block_size(k)));
    const int b = scheme.b;

    BookEmbedding be;
    be.order.reserve(static_cast<std::size_t>(gk.graph.n));
    std::vector<std::pair<int, int>> homed;  // pairs (u, v) homed to the current block
    for (int blk = 0; blk < scheme.block_count(); ++blk) {
        for (int v = scheme.block_begin(blk); v < scheme.block_end(blk); ++v) be.order.push_back(v);
        homed.clear();
        for (int u = scheme.block_begin(blk); u < scheme.block_end(blk); ++u)
            for (int v = u + 1; v < k; ++v) homed.emplace_back(u, v);
        std::sort(homed.begin(), homed.end(), [&](const auto& a, const auto& c) {
            const bool near_a = scheme.block_of(a.second) == blk;
            const bool near_c = scheme.block_of(c.second) == blk;
            return std::tuple(!near_a, -a.second, a.first) < std::tuple(!near_c, -c.second, c.first);
        });
        for (const auto& [u, v] : homed) be.order.push_back(gk.doubleton_vertex(u, v));
    }

    be.edge_pages.resize(gk.graph.edges.size());
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            const int e = pair_index(k, u, v);
            be.edge_pages[static_cast<std::size_t>(2 * e)] = scheme.slot_of(u);
            be.edge_pages[static_cast<std::size_t>(2 * e + 1)] = b + scheme.block_of(u);
        }
    normalize_ids(be.edge_pages);
    return be;
}

}  // namespace gkbook
