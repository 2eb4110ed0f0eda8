#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "konig/graph.hpp"
#include "konig/lf_cover.hpp"

namespace konig {

// Spanning path / spanning cycle existence via bitmask DP; n <= 20.
bool is_traceable(const Graph& g);
bool is_hamiltonian(const Graph& g);
// Vertex order of a witness spanning path/cycle, if one exists.
std::optional<std::vector<int>> hamiltonian_path(const Graph& g);
std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g);

// Permutation graph of rho: edge {v,w} (v<w) iff w appears before v in rho.
Graph permutation_graph(const std::vector<int>& rho);
// Interval graph: edge iff intervals [lo,hi] intersect.
Graph interval_graph(const std::vector<std::pair<int, int>>& intervals);

// Recognition by induced-subgraph scan; n <= 10 for the P4/C4 checks.
bool is_cograph(const Graph& g);            // no induced P_4
bool is_trivially_perfect(const Graph& g);  // no induced P_4 or C_4
bool is_bipartite(const Graph& g);

// Construction tree for trivially perfect graphs: a leaf, a disjoint union of
// subtrees, or the join of a subtree with one new dominating vertex.
struct TPNode {
    enum Kind { leaf, disjoint, join } kind = leaf;
    std::vector<std::unique_ptr<TPNode>> children; // for disjoint
    std::unique_ptr<TPNode> base;                  // for join
};
Graph tp_build(const TPNode& node);

// Constructive covers from the class-specific existence proofs; re-validated
// before return.
LFCover traceable_cover(const Graph& g);
LFCover complete_bipartite_cover(int a, int b);
LFCover trivially_perfect_cover(const TPNode& node);

// Enumerators for the conjecture sweeps (non-isomorphic representatives).
std::vector<Graph> enumerate_cographs(int n);
std::vector<Graph> enumerate_trivially_perfect(int n);
std::vector<Graph> enumerate_permutation_graphs(int n);
std::vector<Graph> enumerate_interval_graphs(int n);
// All bipartite graphs on exactly n vertices (deduped within part splits).
std::vector<Graph> enumerate_bipartite_graphs(int n);

} // namespace konig
