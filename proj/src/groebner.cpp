#include "konig/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace konig {

namespace {

constexpr long long kPairBudget = 2'000'000;

int lex_exps_cmp(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

struct SPair {
    int i, j;
    Exps lcm;
    int deg;
};

// normal selection: lowest lcm total degree first, then lex on the lcm
bool pair_before(const SPair& a, const SPair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = lex_exps_cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

Poly s_poly(const Ring& r, const Poly& f, const Poly& g, const Exps& lcm) {
    Term u{mono_quot(lcm, f.lt().m), gf_inv(r.p, f.lt().c)};
    Term v{mono_quot(lcm, g.lt().m), gf_inv(r.p, g.lt().c)};
    return poly_sub(r, term_mul(r, u, f), term_mul(r, v, g));
}

std::vector<Poly> reduce_basis(const Ring& r, std::vector<Poly> basis) {
    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!mono_divides(basis[j].lt().m, basis[i].lt().m)) continue;
            // break ties between equal leading monomials by keeping the first
            if (basis[j].lt().m == basis[i].lt().m && j > i) continue;
            redundant = true;
        }
        if (!redundant) minimal.push_back(poly_monic(r, basis[i]));
    }
    // inter-reduce tails until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly red = others.empty() ? minimal[i] : normal_form(r, minimal[i], others);
            if (!poly_equal(red, minimal[i])) {
                minimal[i] = poly_monic(r, red);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return mono_cmp(r, a.lt().m, b.lt().m) < 0;
    });
    return minimal;
}

} // namespace

std::vector<Poly> groebner(const Ring& r, const std::vector<Poly>& gens) {
    std::vector<Poly> g;
    for (const auto& f : gens) {
        Poly nf = reorder_poly(r, f);
        if (!nf.is_zero()) g.push_back(poly_monic(r, nf));
    }
    if (g.empty()) return {};

    std::vector<SPair> pending;
    std::set<std::pair<int, int>> pending_keys;
    auto add_pair = [&](int i, int j) {
        Exps lcm = mono_lcm(g[static_cast<std::size_t>(i)].lt().m,
                            g[static_cast<std::size_t>(j)].lt().m);
        pending.push_back(SPair{i, j, lcm, total_degree(lcm)});
        pending_keys.insert({i, j});
    };
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) add_pair(static_cast<int>(i), static_cast<int>(j));

    long long processed = 0;
    while (!pending.empty()) {
        if (++processed > kPairBudget)
            throw size_error("groebner pair budget exceeded: " + std::to_string(processed - 1) +
                             " pairs processed, basis size " + std::to_string(g.size()) +
                             ", pending " + std::to_string(pending.size()));
        auto it = std::min_element(pending.begin(), pending.end(), pair_before);
        SPair pr = *it;
        pending.erase(it);
        pending_keys.erase({pr.i, pr.j});

        const Poly& fi = g[static_cast<std::size_t>(pr.i)];
        const Poly& fj = g[static_cast<std::size_t>(pr.j)];
        // product criterion
        if (mono_coprime(fi.lt().m, fj.lt().m)) continue;
        // chain criterion: some k with LT(g_k) | lcm and both (i,k), (j,k)
        // already handled
        bool discard = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !discard; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!mono_divides(g[static_cast<std::size_t>(k)].lt().m, pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (!pending_keys.count({key_ik.first, key_ik.second}) &&
                !pending_keys.count({key_jk.first, key_jk.second}))
                discard = true;
        }
        if (discard) continue;

        Poly s = normal_form(r, s_poly(r, fi, fj, pr.lcm), g);
        if (s.is_zero()) continue;
        g.push_back(poly_monic(r, s));
        int idx = static_cast<int>(g.size()) - 1;
        for (int i = 0; i < idx; ++i) add_pair(i, idx);
    }
    return reduce_basis(r, std::move(g));
}

Ideal make_ideal(std::vector<Poly> gens) { return Ideal{std::move(gens), std::nullopt}; }

const std::vector<Poly>& Ideal::basis(const Ring& r) const {
    if (!cached_basis) cached_basis = groebner(r, gens);
    return *cached_basis;
}

Ideal ideal_sum(const Ring& r, const Ideal& a, const Ideal& b) {
    (void)r;
    std::vector<Poly> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return make_ideal(std::move(gens));
}

bool ideal_member(const Ring& r, const Poly& f, const Ideal& i) {
    const auto& gb = i.basis(r);
    Poly nf = reorder_poly(r, f);
    if (nf.is_zero()) return true;
    if (gb.empty()) return false;
    return normal_form(r, nf, gb).is_zero();
}

bool ideal_equal(const Ring& r, const Ideal& i, const Ideal& j) {
    const auto& a = i.basis(r);
    const auto& b = j.basis(r);
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!poly_equal(a[k], b[k])) return false;
    return true;
}

Ideal ideal_intersect(const Ring& r, const Ideal& i, const Ideal& j) {
    for (const auto& f : i.gens)
        if (poly_uses_t(r, f)) throw input_error("ideal_intersect inputs must not use t");
    for (const auto& f : j.gens)
        if (poly_uses_t(r, f)) throw input_error("ideal_intersect inputs must not use t");
    Ring er{r.n, r.p, Order::elim_t};
    Poly t = poly_var(er, tvar(er));
    Poly one_minus_t = poly_sub(er, poly_const(er, 1), t);
    std::vector<Poly> gens;
    for (const auto& f : i.gens) gens.push_back(poly_mul(er, t, reorder_poly(er, f)));
    for (const auto& f : j.gens) gens.push_back(poly_mul(er, one_minus_t, reorder_poly(er, f)));
    std::vector<Poly> out;
    for (const auto& f : groebner(er, gens))
        if (!poly_uses_t(er, f)) out.push_back(reorder_poly(r, f));
    return make_ideal(std::move(out));
}

Ideal ideal_colon(const Ring& r, const Ideal& i, const Poly& f) {
    Poly nf = reorder_poly(r, f);
    if (nf.is_zero()) throw input_error("ideal_colon requires f != 0");
    Ideal with_f = ideal_intersect(r, i, make_ideal({nf}));
    std::vector<Poly> out;
    for (const auto& g : with_f.gens) out.push_back(poly_divide_exact(r, g, nf));
    return make_ideal(std::move(out));
}

Ideal ideal_colon_ideal(const Ring& r, const Ideal& i, const Ideal& j) {
    std::vector<Poly> nonzero;
    for (const auto& g : j.gens) {
        Poly ng = reorder_poly(r, g);
        if (!ng.is_zero()) nonzero.push_back(std::move(ng));
    }
    if (nonzero.empty()) return make_ideal({poly_const(r, 1)}); // (I : 0) = (1)
    bool first = true;
    Ideal acc;
    for (const auto& g : nonzero) {
        Ideal c = ideal_colon(r, i, g);
        acc = first ? std::move(c) : ideal_intersect(r, acc, c);
        first = false;
    }
    return acc;
}

std::vector<int> multidegree(const Ring& r, const Exps& m) {
    if (uses_t(r, m)) throw input_error("multidegree is undefined for monomials using t");
    std::vector<int> md(static_cast<std::size_t>(r.n), 0);
    for (int i = 1; i <= r.n; ++i)
        md[static_cast<std::size_t>(i - 1)] =
            m[static_cast<std::size_t>(xvar(r, i))] + m[static_cast<std::size_t>(yvar(r, i))];
    return md;
}

} // namespace konig
