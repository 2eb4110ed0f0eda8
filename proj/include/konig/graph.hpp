#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "konig/errors.hpp"

namespace konig {

// Vertices are 1-based everywhere on the public surface.
// A VertexSet is a bitmask with bit (v-1) set for vertex v.
using VertexSet = std::uint64_t;
using Edge = std::pair<int, int>; // normalized so first < second

inline VertexSet vbit(int v) { return VertexSet{1} << (v - 1); }
inline bool vin(VertexSet s, int v) { return (s >> (v - 1)) & 1; }

std::vector<int> set_to_vertices(VertexSet s);
VertexSet vertices_to_set(const std::vector<int>& vs);

// Simple undirected graph on vertices 1..n. n = 0 is the null graph K_0.
// Immutable after construction; at most 64 vertices.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int i, int j) const;
    std::uint64_t adj(int v) const { return adj_[v - 1]; }
    int degree(int v) const;
    VertexSet vertex_mask() const;
    bool is_null() const { return n_ == 0; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;       // sorted lexicographically
    std::vector<std::uint64_t> adj_;
};

// Edge-list text format: `n <count>` header, `e <i> <j>` lines, `#` comments.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// Standard graph6 byte encoding, one graph per line (n <= 62 supported here).
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// Components of the induced subgraph on V(G) \ removed, as sorted vertex lists
// in increasing order of smallest member. c(S) is the number of components.
std::vector<std::vector<int>> connected_components(const Graph& g, VertexSet removed = 0);
int component_count(const Graph& g, VertexSet removed = 0);
// Component masks (bitmask per component) for the same induced subgraph.
std::vector<VertexSet> component_masks(const Graph& g, VertexSet removed = 0);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Lexicographically minimal adjacency encoding over all vertex permutations.
// Bit k of the result corresponds to the k-th pair (1,2),(1,3),...,(n-1,n).
// Exhaustive over n! permutations; capped at n <= 10.
std::uint64_t canonical_form(const Graph& g);

// Fast canonical relabeling via iterated neighborhood refinement followed by
// exhaustive minimization within refinement classes. Agrees with
// canonical_form as an isomorphism invariant but not bit-for-bit. The edge
// mask fits n <= 11; canon_relabel additionally handles trees of any size
// through a linear-time rooted-code construction.
std::uint64_t canon_key(const Graph& g);
Graph canon_relabel(const Graph& g);

// Exactly one representative per isomorphism class, deterministic order.
// n <= 7; larger sweeps ingest graph6 streams instead.
std::vector<Graph> enumerate_graphs(int n, bool connected_only = false);

// Standard constructions with the conventional labeling.
Graph path_graph(int m);
Graph cycle_graph(int m);
Graph complete_graph(int m);
Graph complete_bipartite_graph(int a, int b);
Graph net_graph(); // the 6-vertex net (3-sunlet)
Graph standard_graph(const std::string& kind, const std::vector<int>& params);

// Disjoint union with the labels of b shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

// Relabel: vertex v of g becomes perm[v-1] (a bijection on 1..n).
Graph relabel(const Graph& g, const std::vector<int>& perm);

} // namespace konig
