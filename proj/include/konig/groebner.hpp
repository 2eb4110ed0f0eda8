#pragma once

// Buchberger's algorithm (reduced Groebner bases) and the derived ideal
// operations: membership, equality, intersection (via t-elimination), and
// colon ideals (via exact division of intersection generators).

#include <optional>
#include <vector>

#include "konig/poly.hpp"

namespace konig {

struct Ideal {
    std::vector<Poly> gens;
    mutable std::optional<std::vector<Poly>> cached_basis; // reduced GB, ring's order

    const std::vector<Poly>& basis(const Ring& r) const;
};

Ideal make_ideal(std::vector<Poly> gens);
Ideal ideal_sum(const Ring& r, const Ideal& a, const Ideal& b);

// the unique reduced Groebner basis under r.ord; deterministic (sorted by
// ascending leading monomial, all leading coefficients 1)
std::vector<Poly> groebner(const Ring& r, const std::vector<Poly>& gens);

bool ideal_member(const Ring& r, const Poly& f, const Ideal& i);
bool ideal_equal(const Ring& r, const Ideal& i, const Ideal& j);

// I cap J by eliminating t from t*I + (1-t)*J; inputs must not use t
Ideal ideal_intersect(const Ring& r, const Ideal& i, const Ideal& j);

// (I : f) and (I : J) = cap over generators g of J of (I : g)
Ideal ideal_colon(const Ring& r, const Ideal& i, const Poly& f);
Ideal ideal_colon_ideal(const Ring& r, const Ideal& i, const Ideal& j);

// multidegree with deg(x_i) = deg(y_i) = e_i; rejects monomials using t
std::vector<int> multidegree(const Ring& r, const Exps& m);

} // namespace konig
