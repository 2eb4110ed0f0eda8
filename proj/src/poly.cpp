#include "konig/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace konig {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Ring make_ring(int n, int p, Order ord) {
    if (n < 0) throw input_error("ring requires n >= 0");
    if (p < 2 || p >= (1 << 16) || !is_prime(p))
        throw input_error("characteristic must be a prime < 2^16");
    return Ring{n, p, ord};
}

int gf_add(int p, int a, int b) { return (a + b) % p; }
int gf_sub(int p, int a, int b) { return ((a - b) % p + p) % p; }
int gf_mul(int p, int a, int b) {
    return static_cast<int>((static_cast<long long>(a) * b) % p);
}

int gf_inv(int p, int a) {
    a = ((a % p) + p) % p;
    if (a == 0) throw input_error("division by zero in GF(p)");
    // Fermat: a^(p-2)
    long long base = a, acc = 1;
    int e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

int total_degree(const Exps& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

int mono_cmp(const Ring& r, const Exps& a, const Exps& b) {
    auto degrevlex_cmp = [](const Exps& u, const Exps& v, int lo, int hi) {
        int du = 0, dv = 0;
        for (int i = lo; i < hi; ++i) {
            du += u[i];
            dv += v[i];
        }
        if (du != dv) return du < dv ? -1 : 1;
        // equal degree: the monomial whose last differing exponent is LARGER
        // is the SMALLER one
        for (int i = hi - 1; i >= lo; --i)
            if (u[i] != v[i]) return u[i] > v[i] ? -1 : 1;
        return 0;
    };
    int nv = r.nvars();
    switch (r.ord) {
        case Order::degrevlex:
            return degrevlex_cmp(a, b, 0, nv);
        case Order::lex:
            for (int i = 0; i < nv; ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case Order::elim_t: {
            int ti = tvar(r);
            if (a[ti] != b[ti]) return a[ti] < b[ti] ? -1 : 1;
            return degrevlex_cmp(a, b, 0, ti);
        }
    }
    return 0;
}

bool mono_divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps mono_mul(const Exps& a, const Exps& b) {
    Exps out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
        if (out[i] >= Ring::exp_limit) throw size_error("monomial exponent overflow");
    }
    return out;
}

Exps mono_quot(const Exps& b, const Exps& a) {
    Exps out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (a[i] > b[i]) throw input_error("inexact monomial quotient");
        out[i] = b[i] - a[i];
    }
    return out;
}

Exps mono_lcm(const Exps& a, const Exps& b) {
    Exps out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

Exps mono_one(const Ring& r) { return Exps(static_cast<std::size_t>(r.nvars()), 0); }

bool mono_coprime(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

bool uses_t(const Ring& r, const Exps& m) { return m[static_cast<std::size_t>(tvar(r))] != 0; }

bool poly_uses_t(const Ring& r, const Poly& f) {
    for (const auto& t : f.terms)
        if (uses_t(r, t.m)) return true;
    return false;
}

Poly make_poly(const Ring& r, std::vector<Term> terms) {
    for (auto& t : terms) {
        if (static_cast<int>(t.m.size()) != r.nvars())
            throw input_error("term has wrong variable count for the ring");
        t.c = ((t.c % r.p) + r.p) % r.p;
    }
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(r, a.m, b.m) > 0;
    });
    Poly out;
    for (auto& t : terms) {
        if (!out.terms.empty() && out.terms.back().m == t.m) {
            out.terms.back().c = gf_add(r.p, out.terms.back().c, t.c);
            if (out.terms.back().c == 0) out.terms.pop_back();
        } else if (t.c != 0) {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

Poly poly_zero() { return Poly{}; }

Poly poly_const(const Ring& r, long long c) {
    int cc = static_cast<int>(((c % r.p) + r.p) % r.p);
    if (cc == 0) return poly_zero();
    return Poly{{Term{mono_one(r), cc}}};
}

Poly poly_var(const Ring& r, int var_index) {
    Exps m = mono_one(r);
    m[static_cast<std::size_t>(var_index)] = 1;
    return Poly{{Term{std::move(m), 1}}};
}

Poly poly_add(const Ring& r, const Poly& a, const Poly& b) {
    Poly out;
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        int cmp;
        if (i >= a.terms.size())
            cmp = -1;
        else if (j >= b.terms.size())
            cmp = 1;
        else
            cmp = mono_cmp(r, a.terms[i].m, b.terms[j].m);
        if (cmp > 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (cmp < 0) {
            out.terms.push_back(b.terms[j++]);
        } else {
            int c = gf_add(r.p, a.terms[i].c, b.terms[j].c);
            if (c) out.terms.push_back(Term{a.terms[i].m, c});
            ++i;
            ++j;
        }
    }
    return out;
}

Poly poly_neg(const Ring& r, const Poly& a) {
    Poly out = a;
    for (auto& t : out.terms) t.c = gf_sub(r.p, 0, t.c);
    return out;
}

Poly poly_sub(const Ring& r, const Poly& a, const Poly& b) {
    return poly_add(r, a, poly_neg(r, b));
}

Poly poly_scale(const Ring& r, const Poly& a, int c) {
    c = ((c % r.p) + r.p) % r.p;
    if (c == 0) return poly_zero();
    Poly out = a;
    for (auto& t : out.terms) t.c = gf_mul(r.p, t.c, c);
    return out;
}

Poly term_mul(const Ring& r, const Term& t, const Poly& a) {
    if (t.c % r.p == 0) return poly_zero();
    Poly out;
    out.terms.reserve(a.terms.size());
    for (const auto& u : a.terms)
        out.terms.push_back(Term{mono_mul(t.m, u.m), gf_mul(r.p, t.c, u.c)});
    return out; // multiplying by a monomial preserves the term order
}

Poly poly_mul(const Ring& r, const Poly& a, const Poly& b) {
    Poly acc;
    for (const auto& t : a.terms) acc = poly_add(r, acc, term_mul(r, t, b));
    return acc;
}

Poly poly_monic(const Ring& r, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(r, a, gf_inv(r.p, a.lt().c));
}

bool poly_equal(const Poly& a, const Poly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].c != b.terms[i].c || a.terms[i].m != b.terms[i].m) return false;
    return true;
}

Poly reorder_poly(const Ring& r, const Poly& a) { return make_poly(r, a.terms); }

DivisionResult divide(const Ring& r, const Poly& f, const std::vector<Poly>& basis) {
    for (const auto& g : basis)
        if (g.is_zero()) throw input_error("division by a zero basis polynomial");
    DivisionResult res;
    res.quotients.assign(basis.size(), poly_zero());
    Poly rest = f;
    Poly rem;
    while (!rest.is_zero()) {
        const Term& lt = rest.lt();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Term& glt = basis[k].lt();
            if (!mono_divides(glt.m, lt.m)) continue;
            Term q{mono_quot(lt.m, glt.m), gf_mul(r.p, lt.c, gf_inv(r.p, glt.c))};
            res.quotients[k] = poly_add(r, res.quotients[k], Poly{{q}});
            rest = poly_sub(r, rest, term_mul(r, q, basis[k]));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.terms.push_back(lt); // lt is the largest remaining term
            rest.terms.erase(rest.terms.begin());
        }
    }
    res.remainder = std::move(rem);
    return res;
}

Poly normal_form(const Ring& r, const Poly& f, const std::vector<Poly>& basis) {
    if (basis.empty()) return f;
    return divide(r, f, basis).remainder;
}

Poly poly_divide_exact(const Ring& r, const Poly& f, const Poly& g) {
    if (g.is_zero()) throw input_error("exact division by zero");
    auto res = divide(r, f, {g});
    if (!res.remainder.is_zero())
        throw theorem_violation("inexact polynomial division where exactness was required");
    return res.quotients[0];
}

namespace {

struct PolyParser {
    const Ring& r;
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw input_error("polynomial parse error at position " + std::to_string(pos) + ": " +
                          what);
    }

    long long read_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        if (pos - start > 12) fail("integer literal too long");
        return std::stoll(std::string(s.substr(start, pos - start)));
    }

    // one factor: variable with optional ^exponent
    void read_var_power(Exps& m) {
        char v = peek();
        int idx;
        if (v == 't') {
            ++pos;
            idx = tvar(r);
        } else if (v == 'x' || v == 'y') {
            ++pos;
            long long i = read_int();
            if (i < 1 || i > r.n)
                fail(std::string(1, v) + std::to_string(i) + " is outside x1..x" +
                     std::to_string(r.n) + "/y1..y" + std::to_string(r.n));
            idx = v == 'x' ? xvar(r, static_cast<int>(i)) : yvar(r, static_cast<int>(i));
        } else {
            fail("expected a variable (x<i>, y<i>, or t)");
        }
        long long e = 1;
        if (peek() == '^') {
            ++pos;
            e = read_int();
        }
        if (e < 0 || m[static_cast<std::size_t>(idx)] + e >= Ring::exp_limit)
            fail("exponent out of range");
        m[static_cast<std::size_t>(idx)] += static_cast<int>(e);
    }

    Term read_term() {
        Term t{mono_one(r), 1};
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.c = static_cast<int>(read_int() % r.p);
            saw_factor = true;
            if (peek() == '*') ++pos;
            else return t; // bare integer term
        }
        while (true) {
            read_var_power(t.m);
            saw_factor = true;
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_factor) fail("empty term");
        return t;
    }

    Poly parse() {
        std::vector<Term> terms;
        if (eof()) fail("empty polynomial text");
        int sign = 1;
        if (peek() == '+') ++pos;
        else if (peek() == '-') {
            sign = -1;
            ++pos;
        }
        while (true) {
            Term t = read_term();
            t.c = ((sign * t.c) % r.p + r.p) % r.p;
            terms.push_back(std::move(t));
            if (eof()) break;
            char op = peek();
            if (op == '+') sign = 1;
            else if (op == '-') sign = -1;
            else fail("expected '+' or '-'");
            ++pos;
        }
        return make_poly(r, std::move(terms));
    }
};

} // namespace

Poly parse_poly(const Ring& r, std::string_view text) {
    PolyParser parser{r, text};
    return parser.parse();
}

std::string format_mono(const Ring& r, const Exps& m) {
    std::string out;
    auto emit = [&](const std::string& name, int e) {
        if (!e) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
    };
    for (int i = 1; i <= r.n; ++i) emit("x" + std::to_string(i), m[static_cast<std::size_t>(xvar(r, i))]);
    for (int i = 1; i <= r.n; ++i) emit("y" + std::to_string(i), m[static_cast<std::size_t>(yvar(r, i))]);
    emit("t", m[static_cast<std::size_t>(tvar(r))]);
    return out.empty() ? "1" : out;
}

std::string format_poly(const Ring& r, const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms) {
        int c = t.c;
        if (out.empty()) {
            // leading term: render p-1 as a leading minus for readability
            if (c == r.p - 1 && r.p > 2) {
                out += "-";
                c = 1;
            }
        } else {
            if (c == r.p - 1 && r.p > 2) {
                out += " - ";
                c = 1;
            } else {
                out += " + ";
            }
        }
        std::string mono = format_mono(r, t.m);
        if (c != 1) {
            out += std::to_string(c);
            if (mono != "1") out += "*" + mono;
        } else {
            out += mono;
        }
    }
    return out;
}

IdealFile parse_ideal_file(const std::string& text, Order ord) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<int> p, n;
    std::vector<std::string> poly_lines;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "char") {
            long long v;
            if (p || !(ls >> v) || v < 2)
                throw input_error("line " + std::to_string(lineno) + ": bad 'char' header");
            p = static_cast<int>(v);
        } else if (first == "n" && !n) {
            long long v;
            if (!(ls >> v) || v < 0)
                throw input_error("line " + std::to_string(lineno) + ": bad 'n' header");
            n = static_cast<int>(v);
        } else {
            if (!p || !n)
                throw input_error("line " + std::to_string(lineno) +
                                  ": 'char <p>' and 'n <count>' headers must precede polynomials");
            std::string rest;
            std::getline(ls, rest);
            poly_lines.push_back(first + rest);
        }
    }
    if (!p || !n) throw input_error("ideal file missing 'char' or 'n' header");
    IdealFile out{make_ring(*n, *p, ord), {}};
    for (const auto& pl : poly_lines) out.gens.push_back(parse_poly(out.ring, pl));
    return out;
}

std::string format_ideal_file(const Ring& r, const std::vector<Poly>& gens) {
    std::string out = "char " + std::to_string(r.p) + "\nn " + std::to_string(r.n) + "\n";
    for (const auto& g : gens) out += format_poly(r, g) + "\n";
    return out;
}

} // namespace konig
