#pragma once

// Binomial edge ideals J(G), the primes P_S(G), and the ideal-theoretic
// verification suites: primary decomposition, regular sequences, z-monomial
// membership, the colon-ideal theorem for Hamiltonian graphs, and the
// associated-prime certificate for H_g^{n-1}(R).

#include <optional>
#include <string>
#include <vector>

#include "konig/graph.hpp"
#include "konig/groebner.hpp"

namespace konig {

// delta_{i,j} = x_i y_j - x_j y_i (requires 1 <= i < j <= n)
Poly delta(const Ring& r, int i, int j);

// J(G) over GF(p); requires n >= 2
Ideal bei(const Ring& r, const Graph& g);

// P_S(G) = (x_i, y_i : i in S) + sum of J(completion of each component of G\S)
Ideal ps_ideal(const Ring& r, const Graph& g, VertexSet s);

// J(G) == intersection of P_S(G) over S in C(G); requires n <= 5
bool check_primary_decomposition(const Graph& g, int p);

// prefix-colon test: for each k, ((d_1..d_{k-1}) : d_k) == (d_1..d_{k-1});
// zero-based failing index reported as 1-based position
struct RegSeqResult {
    bool regular = false;
    int failing_index = 0; // 1-based position of the first failure, 0 if none
};
RegSeqResult regular_sequence_check(const std::vector<Edge>& deltas, const Graph& g, int p);

// z_l, optionally truncated to indices strictly between i and j
struct ZMonomial {
    int l = 0;
    std::optional<int> i, j;
};
Poly z_value(const Ring& r, const ZMonomial& z);

// b = J(P_n) + (z_0, ..., z_{n-2}); requires n >= 3
Ideal root_candidate(const Ring& r);

// z_l^{i,j} * delta_{i,j} in J(P_n) for all 1 <= i < j <= n, 0 <= l <= j-i-1
bool zprop_check(int n, int p);

// every product prod_{i=2}^{n-1} (x_i or y_i) lies in root_candidate(n)
bool grading_prop_check(int n, int p);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// for Hamiltonian g (relabeled so a Hamiltonian cycle reads 1..n):
//  (i) b subset of (a : g) via per-generator membership z_l * delta_{i,j} in a
//  (ii) (a : g) = b   (iii) (a : g) = (a : delta_{1,n})
// where a = J(P_n), g = J(relabeled graph), b = root_candidate(n)
struct ColonReport {
    std::vector<int> relabel_cycle; // the Hamiltonian cycle found, in order
    std::vector<CheckResult> checks;
    bool all_pass() const;
};
ColonReport verify_colon_theorem(const Graph& g, int p);

// certifies Ass(b/a) = {J(K_n)} via the two ideal identities
//   b = intersection over nonempty S in C(P_n) of P_S(P_n)
//   P_empty(P_n) = J(K_n)
struct RootAssReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};
RootAssReport verify_root_ass(int n, int p);

std::string report_to_json(const std::string& suite, const std::vector<CheckResult>& checks);

} // namespace konig
