#pragma once

// Exact multivariate polynomial arithmetic over GF(p) in the variables
// x_1..x_n, y_1..y_n plus one elimination variable t.  Variable precedence is
// x_1 > ... > x_n > y_1 > ... > y_n, with t greatest only under the
// elimination order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "konig/errors.hpp"

namespace konig {

enum class Order { degrevlex, lex, elim_t };

struct Ring {
    int n = 0;                   // x_1..x_n, y_1..y_n, and t
    int p = 2;                   // prime characteristic, p < 2^16
    Order ord = Order::degrevlex;

    int nvars() const { return 2 * n + 1; }
    static constexpr int exp_limit = 1 << 16;
};

Ring make_ring(int n, int p, Order ord = Order::degrevlex);

// variable indices into exponent vectors (i is 1-based)
inline int xvar(const Ring& r, int i) { return i - 1; }
inline int yvar(const Ring& r, int i) { return r.n + i - 1; }
inline int tvar(const Ring& r) { return 2 * r.n; }

// GF(p) scalar arithmetic (values normalized into [0, p))
int gf_add(int p, int a, int b);
int gf_sub(int p, int a, int b);
int gf_mul(int p, int a, int b);
int gf_inv(int p, int a);

using Exps = std::vector<int>; // one exponent per variable, length nvars()

struct Term {
    Exps m;
    int c = 0; // coefficient in [0, p), nonzero in normalized polynomials
};

struct Poly {
    // terms strictly descending in the ring's monomial order, no zero coeffs
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const { return terms.front(); }
};

// monomial helpers
int total_degree(const Exps& m);
int mono_cmp(const Ring& r, const Exps& a, const Exps& b); // -1, 0, +1
bool mono_divides(const Exps& a, const Exps& b);           // a | b
Exps mono_mul(const Exps& a, const Exps& b);               // throws size_error on overflow
Exps mono_quot(const Exps& b, const Exps& a);              // b / a, requires a | b
Exps mono_lcm(const Exps& a, const Exps& b);
Exps mono_one(const Ring& r);
bool mono_coprime(const Exps& a, const Exps& b);
bool uses_t(const Ring& r, const Exps& m);
bool poly_uses_t(const Ring& r, const Poly& f);

// polynomial construction and arithmetic (inputs need not be normalized)
Poly make_poly(const Ring& r, std::vector<Term> terms);
Poly poly_zero();
Poly poly_const(const Ring& r, long long c);
Poly poly_var(const Ring& r, int var_index);
Poly poly_add(const Ring& r, const Poly& a, const Poly& b);
Poly poly_sub(const Ring& r, const Poly& a, const Poly& b);
Poly poly_neg(const Ring& r, const Poly& a);
Poly poly_scale(const Ring& r, const Poly& a, int c);
Poly term_mul(const Ring& r, const Term& t, const Poly& a);
Poly poly_mul(const Ring& r, const Poly& a, const Poly& b);
Poly poly_monic(const Ring& r, const Poly& a);
bool poly_equal(const Poly& a, const Poly& b);
// re-sort a polynomial built under some other order into r's order
Poly reorder_poly(const Ring& r, const Poly& a);

// division algorithm: f = sum quotients[i] * basis[i] + remainder, where no
// remainder term is divisible by any basis leading term
struct DivisionResult {
    std::vector<Poly> quotients;
    Poly remainder;
};
DivisionResult divide(const Ring& r, const Poly& f, const std::vector<Poly>& basis);
Poly normal_form(const Ring& r, const Poly& f, const std::vector<Poly>& basis);
// exact division by a single polynomial; throws theorem_violation if inexact
Poly poly_divide_exact(const Ring& r, const Poly& f, const Poly& g);

// text grammar: terms joined by + / -; term = optional integer coefficient
// with '*'-separated powers such as x3^2, y1, t
Poly parse_poly(const Ring& r, std::string_view text);
std::string format_mono(const Ring& r, const Exps& m);
std::string format_poly(const Ring& r, const Poly& f);

// ideal file format: `char <p>` line, `n <count>` line, one polynomial per line
struct IdealFile {
    Ring ring;
    std::vector<Poly> gens;
};
IdealFile parse_ideal_file(const std::string& text, Order ord = Order::degrevlex);
std::string format_ideal_file(const Ring& r, const std::vector<Poly>& gens);

} // namespace konig
