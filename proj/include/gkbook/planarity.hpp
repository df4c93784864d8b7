// planarity.hpp — planarity decision with the Euler-bound short circuit.
#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "gkbook/graph.hpp"

namespace gkbook {

// Any graph on at most four vertices is planar; a graph with
// m > 3n - 6 (n >= 3) cannot be. Everything else goes to the
// Boyer-Myrvold test.
inline bool is_planar(const Graph& g) {
    check_graph(g);
    if (g.n <= 4) return true;
    if (g.edge_count() > 3 * g.n - 6) return false;
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(
        static_cast<std::size_t>(g.n));
    for (const Edge& e : g.edges)
        boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace gkbook
