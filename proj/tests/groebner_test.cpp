#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "konig/groebner.hpp"

using namespace konig;

namespace {

Ideal ideal_of(const Ring& r, const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    for (const auto& s : gens) ps.push_back(parse_poly(r, s));
    return make_ideal(std::move(ps));
}

// Buchberger's criterion, checked from scratch: every S-polynomial of the
// output reduces to zero against the output
bool is_groebner_basis(const Ring& r, const std::vector<Poly>& basis) {
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            const Poly &f = basis[i], &g = basis[j];
            Exps l = mono_lcm(f.lt().m, g.lt().m);
            Poly sf = term_mul(r, {mono_quot(l, f.lt().m), gf_inv(r.p, f.lt().c)}, f);
            Poly sg = term_mul(r, {mono_quot(l, g.lt().m), gf_inv(r.p, g.lt().c)}, g);
            if (!normal_form(r, poly_sub(r, sf, sg), basis).is_zero()) return false;
        }
    }
    return true;
}

bool is_reduced(const Ring& r, const std::vector<Poly>& basis) {
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].lt().c != 1) return false;
        for (const Term& t : basis[i].terms)
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i && mono_divides(basis[j].lt().m, t.m)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("trivial bases") {
    Ring r = make_ring(2, 5);
    CHECK(groebner(r, {}).empty());
    CHECK(groebner(r, {poly_zero()}).empty());
    auto b = groebner(r, {parse_poly(r, "x1")});
    REQUIRE(b.size() == 1);
    CHECK(poly_equal(b[0], parse_poly(r, "x1")));
    auto c = groebner(r, {parse_poly(r, "3")});
    REQUIRE(c.size() == 1);
    CHECK(poly_equal(c[0], parse_poly(r, "1")));
}

TEST_CASE("edge binomials of the 3-path: known reduced basis") {
    Ring r = make_ring(3, 2);
    auto b = groebner(r, {parse_poly(r, "x1*y2 - x2*y1"), parse_poly(r, "x2*y3 - x3*y2")});
    REQUIRE(b.size() == 3);
    CHECK(is_groebner_basis(r, b));
    CHECK(is_reduced(r, b));
    // the one new element is the degree-4 S-polynomial remainder
    CHECK(poly_equal(b[2], parse_poly(r, "x1*x3*y2^2 - x2^2*y1*y3")));
}

TEST_CASE("reduced basis is canonical: invariant under generator presentation") {
    for (int p : {2, 7}) {
        Ring r = make_ring(3, p);
        std::vector<std::string> gens = {"x1*y2 - x2*y1", "x2*y3 - x3*y2", "x1*y3 - x3*y1"};
        auto ref = groebner(r, {parse_poly(r, gens[0]), parse_poly(r, gens[1]),
                                parse_poly(r, gens[2])});
        CHECK(is_groebner_basis(r, ref));
        CHECK(is_reduced(r, ref));
        // permute and rescale generators
        auto alt = groebner(
            r, {poly_scale(r, parse_poly(r, gens[2]), p - 1), parse_poly(r, gens[0]),
                poly_scale(r, parse_poly(r, gens[1]), std::max(1, p / 2))});
        REQUIRE(alt.size() == ref.size());
        for (size_t k = 0; k < ref.size(); ++k) CHECK(poly_equal(alt[k], ref[k]));
        // adding a redundant element (a combination) changes nothing
        Poly comb = poly_add(r, parse_poly(r, gens[0]),
                             poly_mul(r, parse_poly(r, "x2"), parse_poly(r, gens[1])));
        auto aug = groebner(r, {parse_poly(r, gens[0]), parse_poly(r, gens[1]),
                                parse_poly(r, gens[2]), comb});
        REQUIRE(aug.size() == ref.size());
        for (size_t k = 0; k < ref.size(); ++k) CHECK(poly_equal(aug[k], ref[k]));
    }
}

TEST_CASE("output is sorted ascending by leading monomial") {
    Ring r = make_ring(3, 3);
    auto b = groebner(r, {parse_poly(r, "x1*y2 - x2*y1"), parse_poly(r, "x2*y3 - x3*y2"),
                          parse_poly(r, "x1*y3 - x3*y1")});
    for (size_t k = 1; k < b.size(); ++k)
        CHECK(mono_cmp(r, b[k - 1].lt().m, b[k].lt().m) < 0);
}

TEST_CASE("random ideals satisfy the Buchberger criterion and reducedness") {
    Ring r = make_ring(2, 7);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> ex(0, 2), cf(1, 6), nt(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Poly> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<Term> terms;
            int k = nt(rng);
            for (int t = 0; t < k; ++t) {
                Exps m(r.nvars(), 0);
                for (int v = 0; v < r.nvars() - 1; ++v) m[v] = ex(rng);
                terms.push_back({std::move(m), cf(rng)});
            }
            gens.push_back(make_poly(r, std::move(terms)));
        }
        auto b = groebner(r, gens);
        CHECK(is_groebner_basis(r, b));
        CHECK(is_reduced(r, b));
        for (const Poly& g : gens)
            CHECK(normal_form(r, g, b).is_zero());
    }
}

TEST_CASE("membership") {
    Ring r = make_ring(3, 2);
    Ideal i = ideal_of(r, {"x1*y2 - x2*y1", "x2*y3 - x3*y2"});
    CHECK(ideal_member(r, parse_poly(r, "x1*y2 - x2*y1"), i));
    CHECK(ideal_member(r, poly_zero(), i));
    CHECK(ideal_member(r, parse_poly(r, "x1*x3*y2^2 - x2^2*y1*y3"), i));
    CHECK(!ideal_member(r, parse_poly(r, "x1*y3 - x3*y1"), i));
    CHECK(!ideal_member(r, parse_poly(r, "1"), i));
}

TEST_CASE("equality") {
    Ring r = make_ring(2, 5);
    CHECK(ideal_equal(r, ideal_of(r, {"x1", "y1"}), ideal_of(r, {"y1", "x1 + 2*y1"})));
    CHECK(!ideal_equal(r, ideal_of(r, {"x1"}), ideal_of(r, {"x1", "y1"})));
    CHECK(ideal_equal(r, ideal_of(r, {}), make_ideal({poly_zero()})));
}

TEST_CASE("intersection") {
    Ring r = make_ring(2, 5);
    // (x1) cap (y1) = (x1*y1)
    CHECK(ideal_equal(r, ideal_intersect(r, ideal_of(r, {"x1"}), ideal_of(r, {"y1"})),
                      ideal_of(r, {"x1*y1"})));
    // I cap I = I
    Ideal i = ideal_of(r, {"x1*y2 - x2*y1", "x1 + y2"});
    CHECK(ideal_equal(r, ideal_intersect(r, i, i), i));
    // intersection with the unit ideal is the identity
    CHECK(ideal_equal(r, ideal_intersect(r, i, ideal_of(r, {"1"})), i));
    // intersection with zero is zero
    CHECK(ideal_equal(r, ideal_intersect(r, i, ideal_of(r, {})), ideal_of(r, {})));
    // inputs may not mention t
    Poly tp = poly_var(r, tvar(r));
    CHECK_THROWS_AS(ideal_intersect(r, make_ideal({tp}), i), input_error);
}

TEST_CASE("primary decomposition of the 3-path edge binomials") {
    // (d12, d13) = (x1, y1) cap J(K3 on {1,2,3}) -- the star with centre 1
    Ring r = make_ring(3, 2);
    Ideal star = ideal_of(r, {"x1*y2 - x2*y1", "x1*y3 - x3*y1"});
    Ideal meet = ideal_intersect(
        r, ideal_of(r, {"x1", "y1"}),
        ideal_of(r, {"x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"}));
    CHECK(ideal_equal(r, star, meet));
}

TEST_CASE("colon by a polynomial") {
    Ring r = make_ring(2, 5);
    // ((x1*y1) : x1) = (y1)
    CHECK(ideal_equal(r, ideal_colon(r, ideal_of(r, {"x1*y1"}), parse_poly(r, "x1")),
                      ideal_of(r, {"y1"})));
    // ((x1) : y1) = (x1) since y1 is a nonzerodivisor mod (x1)
    CHECK(ideal_equal(r, ideal_colon(r, ideal_of(r, {"x1"}), parse_poly(r, "y1")),
                      ideal_of(r, {"x1"})));
    // (I : f) = (1) when f in I
    CHECK(ideal_equal(r, ideal_colon(r, ideal_of(r, {"x1"}), parse_poly(r, "x1*y2")),
                      ideal_of(r, {"1"})));
    // (I : 1) = I
    Ideal i = ideal_of(r, {"x1*y2 - x2*y1"});
    CHECK(ideal_equal(r, ideal_colon(r, i, parse_poly(r, "1")), i));
    CHECK_THROWS_AS(ideal_colon(r, i, poly_zero()), input_error);
}

TEST_CASE("colon by an ideal") {
    Ring r = make_ring(2, 5);
    Ideal i = ideal_of(r, {"x1*y1", "x1*y2"});
    // (I : (y1, y2)) = (x1, y1*y2)? compute both colons: (I:y1) = (x1, y2)?
    // no -- verify directly against the two-generator intersection
    Ideal by_def = ideal_intersect(r, ideal_colon(r, i, parse_poly(r, "y1")),
                                   ideal_colon(r, i, parse_poly(r, "y2")));
    CHECK(ideal_equal(r, ideal_colon_ideal(r, i, ideal_of(r, {"y1", "y2"})), by_def));
    // (I : (0)) = (1)
    CHECK(ideal_equal(r, ideal_colon_ideal(r, i, ideal_of(r, {})), ideal_of(r, {"1"})));
}

TEST_CASE("multidegree") {
    Ring r = make_ring(3, 2);
    Exps m(r.nvars(), 0);
    m[xvar(r, 1)] = 2;
    m[yvar(r, 1)] = 1;
    m[yvar(r, 3)] = 4;
    CHECK(multidegree(r, m) == std::vector<int>{3, 0, 4});
    m[tvar(r)] = 1;
    CHECK_THROWS_AS(multidegree(r, m), input_error);
}

TEST_CASE("lex elimination produces the projection") {
    // (x1 - y1^2, x2 - y1^3) under lex: eliminating x-part leaves nothing here,
    // but membership of the resultant-style relation holds
    Ring r = make_ring(2, 7, Order::lex);
    Ideal i = ideal_of(r, {"x1 - y1^2", "x2 - y1^3"});
    CHECK(ideal_member(r, parse_poly(r, "x1^3 - x2^2"), i));
}
