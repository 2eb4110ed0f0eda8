#pragma once

#include <vector>

#include "konig/graph.hpp"

namespace konig {

// An acyclic edge subset of a host graph in which every vertex has degree <= 2
// (every component is a path).
struct LinearForest {
    int n = 0;                // host vertex count
    std::vector<Edge> edges;  // sorted

    bool operator==(const LinearForest& o) const = default;
    Graph as_graph() const { return Graph(n, edges); }
};

bool is_linear_forest(const Graph& host, const std::vector<Edge>& edges);

// LF(G): maximum number of edges over linear forests in G. Exact
// branch-and-bound; |E| <= 40.
int lf_number(const Graph& g);

// Witness achieving lf_number(g); lexicographically least sorted edge list
// among optima.
LinearForest max_linear_forest(const Graph& g);

// Every maximal linear forest exactly once, ordered by edge list; n <= 8.
std::vector<LinearForest> all_max_linear_forests(const Graph& g);

} // namespace konig
