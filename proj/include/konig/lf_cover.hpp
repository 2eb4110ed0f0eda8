#pragma once

#include <optional>
#include <string>
#include <vector>

#include "konig/graph.hpp"
#include "konig/linear_forest.hpp"

namespace konig {

struct LFCover {
    LinearForest forest;
    VertexSet s = 0;
};

struct CoverCheck {
    bool ok = false;
    std::string diagnostic; // first failing criterion and witness, empty on ok
};

// (F,S) is an LF-cover iff F is a maximal linear forest of g and
//   (1) no vertex of S is a leaf of F,
//   (2) no two vertices of S are adjacent in F,
//   (3) every edge of g has an endpoint in S or lies in one component of F\S.
CoverCheck verify_lf_cover(const Graph& g, const LinearForest& f, VertexSet s);

// All s making (f, s) an LF-cover of g, by popcount then value; n <= 10.
// These index the associated primes P_S(F) of the top local cohomology module.
std::vector<VertexSet> all_covering_sets(const Graph& g, const LinearForest& f);

// Searches the deterministic witness forest only (justified by the
// forest-independence half of the main theorem); returns the
// minimum-cardinality, lexicographically least covering set if any.
std::optional<LFCover> find_lf_cover(const Graph& g);

struct KonigVerdict {
    int grade = 0;
    int lf = 0;
    bool konig = false;
    std::optional<LFCover> cover;
};

// konig = (grade == lf); cross-checked against cover existence, a mismatch
// throws theorem_violation.
KonigVerdict is_konig(const Graph& g);

} // namespace konig
