#include "konig/bei.hpp"

#include <algorithm>

#include <json.hpp>

#include "konig/classes.hpp"
#include "konig/cutset.hpp"

namespace konig {

Poly delta(const Ring& r, int i, int j) {
    if (i < 1 || j <= i || j > r.n) throw input_error("delta requires 1 <= i < j <= n");
    Exps a = mono_one(r), b = mono_one(r);
    a[static_cast<std::size_t>(xvar(r, i))] = 1;
    a[static_cast<std::size_t>(yvar(r, j))] = 1;
    b[static_cast<std::size_t>(xvar(r, j))] = 1;
    b[static_cast<std::size_t>(yvar(r, i))] = 1;
    return make_poly(r, {Term{std::move(a), 1}, Term{std::move(b), -1}});
}

Ideal bei(const Ring& r, const Graph& g) {
    if (g.n() < 2) throw input_error("binomial edge ideals require n >= 2");
    if (g.n() != r.n) throw input_error("graph and ring vertex counts differ");
    std::vector<Poly> gens;
    for (const auto& [i, j] : g.edges()) gens.push_back(delta(r, i, j));
    return make_ideal(std::move(gens));
}

Ideal ps_ideal(const Ring& r, const Graph& g, VertexSet s) {
    if (g.n() != r.n) throw input_error("graph and ring vertex counts differ");
    if (s & ~g.vertex_mask()) throw input_error("S is not a subset of V(G)");
    std::vector<Poly> gens;
    for (int v : set_to_vertices(s)) {
        gens.push_back(poly_var(r, xvar(r, v)));
        gens.push_back(poly_var(r, yvar(r, v)));
    }
    for (VertexSet comp : component_masks(g, s)) {
        auto verts = set_to_vertices(comp);
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                gens.push_back(delta(r, verts[a], verts[b]));
    }
    return make_ideal(std::move(gens));
}

bool check_primary_decomposition(const Graph& g, int p) {
    if (g.n() > 5) throw size_error("primary decomposition check capped at n <= 5");
    Ring r = make_ring(g.n(), p);
    Ideal j = bei(r, g);
    auto report = cut_sets(g);
    bool first = true;
    Ideal inter;
    for (const auto& entry : report.sets) {
        Ideal ps = ps_ideal(r, g, entry.set);
        inter = first ? std::move(ps) : ideal_intersect(r, inter, ps);
        first = false;
    }
    return ideal_equal(r, j, inter);
}

RegSeqResult regular_sequence_check(const std::vector<Edge>& deltas, const Graph& g, int p) {
    if (deltas.empty()) throw input_error("regular_sequence_check requires a non-empty list");
    if (g.n() > 5) throw size_error("regular sequence check capped at n <= 5");
    Ring r = make_ring(g.n(), p);
    std::vector<Poly> prefix;
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        Poly d = delta(r, deltas[k].first, deltas[k].second);
        Ideal pre = make_ideal(prefix);
        if (prefix.empty()) {
            // (0 : d) = 0 over a domain; nothing to check
        } else {
            Ideal colon = ideal_colon(r, pre, d);
            if (!ideal_equal(r, colon, pre))
                return RegSeqResult{false, static_cast<int>(k) + 1};
        }
        prefix.push_back(std::move(d));
    }
    return RegSeqResult{true, 0};
}

Poly z_value(const Ring& r, const ZMonomial& z) {
    int n = r.n;
    int i = 1, j = n;
    if (z.i.has_value() != z.j.has_value())
        throw input_error("z truncation requires both i and j");
    if (z.i) {
        i = *z.i;
        j = *z.j;
        if (i < 1 || j <= i || j > n) throw input_error("z truncation requires 1 <= i < j <= n");
    } else if (n < 2) {
        throw input_error("z_l requires n >= 2");
    }
    if (z.l < 0 || z.l > j - i - 1) throw input_error("z index l outside 0 <= l <= j-i-1");
    // z_l^{i,j} = x_{i+1} ... x_{j-1-l} * y_{j-l} ... y_{j-1}; z_l^{i,i+1} = 1
    Exps m = mono_one(r);
    for (int k = i + 1; k <= j - 1 - z.l; ++k) m[static_cast<std::size_t>(xvar(r, k))] += 1;
    for (int k = j - z.l; k <= j - 1; ++k) m[static_cast<std::size_t>(yvar(r, k))] += 1;
    return Poly{{Term{std::move(m), 1}}};
}

Ideal root_candidate(const Ring& r) {
    if (r.n < 3) throw input_error("root_candidate requires n >= 3");
    Ideal b = bei(r, path_graph(r.n));
    for (int l = 0; l <= r.n - 2; ++l) b.gens.push_back(z_value(r, ZMonomial{l, {}, {}}));
    b.cached_basis.reset();
    return b;
}

bool zprop_check(int n, int p) {
    if (n > 7) throw size_error("zprop check capped at n <= 7");
    if (n < 2) throw input_error("zprop check requires n >= 2");
    Ring r = make_ring(n, p);
    Ideal a = bei(r, path_graph(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = 0; l <= j - i - 1; ++l) {
                Poly prod = poly_mul(r, z_value(r, ZMonomial{l, i, j}), delta(r, i, j));
                if (!ideal_member(r, prod, a)) return false;
            }
    return true;
}

bool grading_prop_check(int n, int p) {
    if (n > 8) throw size_error("grading check capped at n <= 8");
    if (n < 3) throw input_error("grading check requires n >= 3");
    Ring r = make_ring(n, p);
    Ideal b = root_candidate(r);
    int bits = n - 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
        Exps m = mono_one(r);
        for (int k = 0; k < bits; ++k) {
            int v = k + 2; // vertices 2 .. n-1
            int var = (mask >> k) & 1 ? yvar(r, v) : xvar(r, v);
            m[static_cast<std::size_t>(var)] = 1;
        }
        if (!ideal_member(r, Poly{{Term{std::move(m), 1}}}, b)) return false;
    }
    return true;
}

bool ColonReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool RootAssReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

ColonReport verify_colon_theorem(const Graph& g, int p) {
    int n = g.n();
    if (n > 5) throw size_error("colon theorem check capped at n <= 5");
    auto cycle = hamiltonian_cycle(g);
    if (!cycle) throw input_error("verify_colon_theorem requires a Hamiltonian graph");
    // relabel so the found cycle reads 1, 2, ..., n
    std::vector<int> perm(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>((*cycle)[static_cast<std::size_t>(k)] - 1)] = k + 1;
    Graph h = relabel(g, perm);

    Ring r = make_ring(n, p);
    Ideal a = bei(r, path_graph(n));
    Ideal gi = bei(r, h);
    Ideal b = root_candidate(r);

    ColonReport rep;
    rep.relabel_cycle = *cycle;

    // (i) z_l * delta_{i,j} in a for every l and every edge of the graph
    bool sub_ok = true;
    std::string sub_detail;
    for (int l = 0; l <= n - 2 && sub_ok; ++l) {
        Poly zl = z_value(r, ZMonomial{l, {}, {}});
        for (const auto& [i, j] : h.edges()) {
            if (!ideal_member(r, poly_mul(r, zl, delta(r, i, j)), a)) {
                sub_ok = false;
                sub_detail = "z_" + std::to_string(l) + " * delta_{" + std::to_string(i) + "," +
                             std::to_string(j) + "} not in a";
                break;
            }
        }
    }
    rep.checks.push_back({"b-subset-of-colon", sub_ok, sub_detail});

    Ideal colon_ag = ideal_colon_ideal(r, a, gi);
    bool eq_b = ideal_equal(r, colon_ag, b);
    rep.checks.push_back({"colon-equals-b", eq_b, eq_b ? "" : "(a : g) != b"});

    Ideal colon_d = ideal_colon(r, a, delta(r, 1, n));
    bool eq_d = ideal_equal(r, colon_ag, colon_d);
    rep.checks.push_back({"colon-equals-delta-1n", eq_d, eq_d ? "" : "(a : g) != (a : delta_{1,n})"});
    return rep;
}

RootAssReport verify_root_ass(int n, int p) {
    if (n > 4) throw size_error("root associated-prime check capped at n <= 4");
    if (n < 3) throw input_error("root associated-prime check requires n >= 3");
    Ring r = make_ring(n, p);
    Graph pn = path_graph(n);
    Ideal b = root_candidate(r);

    RootAssReport rep;
    bool first = true;
    Ideal inter;
    for (const auto& entry : cut_sets(pn).sets) {
        if (entry.set == 0) continue;
        Ideal ps = ps_ideal(r, pn, entry.set);
        inter = first ? std::move(ps) : ideal_intersect(r, inter, ps);
        first = false;
    }
    bool eq1 = !first && ideal_equal(r, b, inter);
    rep.checks.push_back(
        {"b-equals-intersection-of-nonempty-PS", eq1,
         eq1 ? "" : "b != intersection of P_S(P_n) over nonempty cut sets"});

    bool eq2 = ideal_equal(r, ps_ideal(r, pn, 0), bei(r, complete_graph(n)));
    rep.checks.push_back({"P-empty-equals-JKn", eq2, eq2 ? "" : "P_empty(P_n) != J(K_n)"});
    return rep;
}

std::string report_to_json(const std::string& suite, const std::vector<CheckResult>& checks) {
    nlohmann::json j;
    j["suite"] = suite;
    bool all = true;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        all = all && c.pass;
    }
    j["pass"] = all;
    return j.dump(2);
}

} // namespace konig
