#pragma once

#include <vector>

#include "konig/graph.hpp"

namespace konig {

struct CutSetEntry {
    VertexSet set;
    int height; // |S| + n - c(S)
};

struct CutSetReport {
    std::vector<CutSetEntry> sets; // all of C(G), by popcount then value
    int grade = 0;                 // min height
    int dim = 0;                   // 2n - grade
};

// S is a cut set iff S = {} or removing any single v from S strictly drops
// the component count of G \ S.
bool is_cut_set(const Graph& g, VertexSet s);

// Full 2^n scan; n <= 24.
CutSetReport cut_sets(const Graph& g);

// min over all subsets of |S| + n - c(S); the minimum is always attained at a
// cut set, so this equals the grade from cut_sets without listing C(G).
int grade(const Graph& g);

} // namespace konig
