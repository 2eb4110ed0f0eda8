#pragma once

#include <string>
#include <vector>

#include "konig/graph.hpp"
#include "konig/lf_cover.hpp"

namespace konig {

// One loop iteration of the inductive tree-cover construction.
struct TreeCoverStep {
    int case_no = 0;            // 0: path component absorbed, 2: branch point
                                // with >= 2 adjacent leaves, 3: two hanging
                                // paths joined through the branch point
    int branch_point = 0;       // 0 for case 0
    std::vector<int> leaves_used;
    std::vector<int> removed_vertices;
};

struct TreeCoverTrace {
    std::vector<TreeCoverStep> steps;
    LFCover result;
};

// Branch point = vertex of degree >= 3; extremal = adjacent to at most one
// other branch point. Sorted ascending. Empty exactly when t is a path.
std::vector<int> extremal_branch_points(const Graph& t);

// The inductive construction: repeatedly peel the deepest branch point (BFS
// depth from the component's smallest vertex; tie-break smaller label), whose
// hanging subtrees are therefore pure paths, until only path components
// remain. Deterministic; the output is re-verified before return.
TreeCoverTrace tree_lf_cover(const Graph& t);

std::string format_trace(const TreeCoverTrace& trace);

// All non-isomorphic trees on n vertices (leaf augmentation + canonical dedup).
std::vector<Graph> enumerate_trees(int n);

// Trees from all Prüfer sequences, deduped; n <= 9. Independent route used to
// cross-check enumerate_trees.
std::vector<Graph> enumerate_trees_prufer(int n);

// Decode one Prüfer sequence (length n-2, entries in 1..n) to its tree.
Graph prufer_decode(int n, const std::vector<int>& seq);

} // namespace konig
