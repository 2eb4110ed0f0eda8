#include "konig/lf_cover.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "konig/cutset.hpp"

namespace konig {

namespace {

// lexicographic order on sorted vertex lists: the lowest differing bit decides
bool lex_less(VertexSet a, VertexSet b) {
    VertexSet d = a ^ b;
    if (!d) return false;
    return a & (d & -d);
}

std::string vs_str(VertexSet s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v : set_to_vertices(s)) {
        if (!first) out << ",";
        out << v;
        first = false;
    }
    out << "}";
    return out.str();
}

// Covering sets are subsets of internal (non-leaf) forest vertices that are
// independent in the forest; criterion (3) is checked against the component
// partition of F \ S.
bool criterion3_holds(const Graph& g, const Graph& fg, VertexSet s, Edge* witness) {
    auto comps = component_masks(fg, s);
    std::vector<int> comp_of(g.n() + 1, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : set_to_vertices(comps[c])) comp_of[v] = static_cast<int>(c);
    for (auto e : g.edges()) {
        if (vin(s, e.first) || vin(s, e.second)) continue;
        if (comp_of[e.first] != comp_of[e.second]) {
            if (witness) *witness = e;
            return false;
        }
    }
    return true;
}

} // namespace

CoverCheck verify_lf_cover(const Graph& g, const LinearForest& f, VertexSet s) {
    if (f.n != g.n()) return {false, "forest host size mismatch"};
    for (auto [i, j] : f.edges)
        if (!g.has_edge(i, j))
            return {false, "forest edge {" + std::to_string(i) + "," + std::to_string(j) +
                               "} not in the graph"};
    if (!is_linear_forest(g, f.edges)) return {false, "edge subset is not a linear forest"};
    if (static_cast<int>(f.edges.size()) != lf_number(g))
        return {false, "forest is not maximal"};
    Graph fg = f.as_graph();
    if (s & ~g.vertex_mask()) return {false, "S contains vertices outside the graph"};
    for (int v : set_to_vertices(s)) {
        if (fg.degree(v) <= 1)
            return {false, "criterion (1): vertex " + std::to_string(v) + " is a leaf of F"};
    }
    for (int v : set_to_vertices(s)) {
        VertexSet adj_in_s = fg.adj(v) & s;
        if (adj_in_s) {
            int w = std::countr_zero(adj_in_s) + 1;
            return {false, "criterion (2): vertices " + std::to_string(v) + " and " +
                               std::to_string(w) + " are adjacent in F"};
        }
    }
    Edge bad;
    if (!criterion3_holds(g, fg, s, &bad))
        return {false, "criterion (3): edge {" + std::to_string(bad.first) + "," +
                           std::to_string(bad.second) + "} is uncovered; S = " + vs_str(s)};
    return {true, ""};
}

std::vector<VertexSet> all_covering_sets(const Graph& g, const LinearForest& f) {
    if (g.n() > 10) throw size_error("all_covering_sets capped at n <= 10");
    Graph fg = f.as_graph();
    if (!is_linear_forest(g, f.edges) || static_cast<int>(f.edges.size()) != lf_number(g))
        throw input_error("all_covering_sets: not a maximal linear forest of the graph");
    // candidates: internal forest vertices
    std::vector<int> internal;
    for (int v = 1; v <= g.n(); ++v)
        if (fg.degree(v) >= 2) internal.push_back(v);
    std::vector<VertexSet> out;
    std::size_t k = internal.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
        VertexSet s = 0;
        for (std::size_t t = 0; t < k; ++t)
            if ((pick >> t) & 1) s |= vbit(internal[t]);
        bool indep = true;
        for (int v : set_to_vertices(s))
            if (fg.adj(v) & s) { indep = false; break; }
        if (!indep) continue;
        if (criterion3_holds(g, fg, s, nullptr)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : lex_less(a, b);
    });
    return out;
}

std::optional<LFCover> find_lf_cover(const Graph& g) {
    LinearForest f = max_linear_forest(g);
    Graph fg = f.as_graph();
    std::vector<int> internal;
    for (int v = 1; v <= g.n(); ++v)
        if (fg.degree(v) >= 2) internal.push_back(v);
    std::size_t k = internal.size();
    // minimum cardinality first, then lexicographically least vertex set
    std::optional<VertexSet> best;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
        VertexSet s = 0;
        for (std::size_t t = 0; t < k; ++t)
            if ((pick >> t) & 1) s |= vbit(internal[t]);
        if (best) {
            int pb = std::popcount(*best), ps = std::popcount(s);
            if (ps > pb || (ps == pb && !lex_less(s, *best))) continue;
        }
        bool indep = true;
        for (int v : set_to_vertices(s))
            if (fg.adj(v) & s) { indep = false; break; }
        if (!indep) continue;
        if (criterion3_holds(g, fg, s, nullptr)) best = s;
    }
    if (!best) return std::nullopt;
    return LFCover{std::move(f), *best};
}

KonigVerdict is_konig(const Graph& g) {
    KonigVerdict v;
    v.grade = grade(g);
    v.lf = lf_number(g);
    v.cover = find_lf_cover(g);
    v.konig = (v.grade == v.lf);
    if (v.konig != v.cover.has_value())
        throw theorem_violation("grade/LF equality and cover existence disagree on " +
                                to_graph6(g) + ": grade " + std::to_string(v.grade) + ", LF " +
                                std::to_string(v.lf) + ", cover " +
                                (v.cover ? "found" : "absent"));
    return v;
}

} // namespace konig
