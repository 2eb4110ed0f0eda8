#include "konig/cutset.hpp"

#include <algorithm>
#include <bit>

namespace konig {

bool is_cut_set(const Graph& g, VertexSet s) {
    if (s == 0) return true;
    int c = component_count(g, s);
    VertexSet scan = s;
    while (scan) {
        VertexSet v = scan & -scan;
        scan &= scan - 1;
        if (component_count(g, s & ~v) >= c) return false;
    }
    return true;
}

CutSetReport cut_sets(const Graph& g) {
    int n = g.n();
    if (n > 24) throw size_error("cut_sets capped at n <= 24");
    CutSetReport rep;
    // memoized component counts over the whole subset lattice
    std::vector<std::uint8_t> c(std::size_t{1} << n);
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s)
        c[s] = static_cast<std::uint8_t>(component_count(g, s));
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
        bool ok = true;
        VertexSet scan = s;
        while (ok && scan) {
            VertexSet v = scan & -scan;
            scan &= scan - 1;
            ok = c[s & ~v] < c[s];
        }
        if (ok) rep.sets.push_back({s, std::popcount(s) + n - c[s]});
    }
    std::sort(rep.sets.begin(), rep.sets.end(), [](const CutSetEntry& a, const CutSetEntry& b) {
        int pa = std::popcount(a.set), pb = std::popcount(b.set);
        return pa != pb ? pa < pb : a.set < b.set;
    });
    rep.grade = 2 * n;
    for (const auto& e : rep.sets) rep.grade = std::min(rep.grade, e.height);
    if (n == 0) rep.grade = 0;
    rep.dim = 2 * n - rep.grade;
    return rep;
}

int grade(const Graph& g) {
    int n = g.n();
    if (n > 24) throw size_error("grade capped at n <= 24");
    if (n == 0) return 0;
    int best = 2 * n;
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
        int h = std::popcount(s) + n - component_count(g, s);
        best = std::min(best, h);
    }
    return best;
}

} // namespace konig
