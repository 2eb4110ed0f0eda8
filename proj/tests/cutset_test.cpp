#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "konig/cutset.hpp"

using namespace konig;

namespace {

// independent brute force: height minimum straight from the definition
int grade_oracle(const Graph& g) {
    int best = 1 << 20;
    for (VertexSet s = 0; s < (VertexSet{1} << g.n()); ++s) {
        int h = static_cast<int>(std::popcount(s)) + g.n() - component_count(g, s);
        best = std::min(best, h);
    }
    return best;
}

// cut set predicate straight from the definition
bool is_cut_set_oracle(const Graph& g, VertexSet s) {
    if (s == 0) return true;
    if ((s & ~g.vertex_mask()) != 0) return false;
    int c = component_count(g, s);
    for (int v : set_to_vertices(s))
        if (component_count(g, s & ~vbit(v)) >= c) return false;
    return true;
}

} // namespace

TEST_CASE("cut set predicate matches the definitional oracle, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (VertexSet s = 0; s < (VertexSet{1} << n); ++s)
                CHECK(is_cut_set(g, s) == is_cut_set_oracle(g, s));
}

TEST_CASE("empty set is always a cut set; out-of-range vertices are not") {
    CHECK(is_cut_set(path_graph(3), 0));
    CHECK(!is_cut_set(path_graph(3), vbit(4)));
}

TEST_CASE("cut sets of the net") {
    // net: triangle 1-2-3 with pendant leaves 4,5,6 at 1,2,3
    Graph net = net_graph();
    CutSetReport r = cut_sets(net);
    // C(net) = {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}
    std::vector<VertexSet> expect = {
        0, vbit(1), vbit(2), vbit(3),
        vbit(1) | vbit(2), vbit(1) | vbit(3), vbit(2) | vbit(3)};
    std::vector<VertexSet> got;
    for (const auto& e : r.sets) got.push_back(e.set);
    CHECK(got == expect);
    CHECK(r.grade == 5);
    CHECK(r.dim == 7);
    // heights: |S| + 6 - c(S)
    for (const auto& e : r.sets)
        CHECK(e.height == static_cast<int>(std::popcount(e.set)) + 6 -
                              component_count(net, e.set));
}

TEST_CASE("grade of paths, complete graphs, cycles is n - 1") {
    for (int n = 2; n <= 7; ++n) {
        CHECK(grade(path_graph(n)) == n - 1);
        CHECK(grade(complete_graph(n)) == n - 1);
        if (n >= 3) CHECK(grade(cycle_graph(n)) == n - 1);
    }
}

TEST_CASE("grade matches brute-force oracle and cut_sets on all graphs n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            int go = grade_oracle(g);
            CHECK(grade(g) == go);
            CutSetReport r = cut_sets(g);
            CHECK(r.grade == go);
            CHECK(r.dim == 2 * n - go);
            // minimum over C(G) alone already attains the grade
            int min_over_cuts = 1 << 20;
            for (const auto& e : r.sets) min_over_cuts = std::min(min_over_cuts, e.height);
            CHECK(min_over_cuts == go);
        }
    }
}

TEST_CASE("cut set listing is ordered by popcount then value") {
    CutSetReport r = cut_sets(complete_bipartite_graph(2, 3));
    for (size_t k = 1; k < r.sets.size(); ++k) {
        auto a = r.sets[k - 1].set, b = r.sets[k].set;
        bool ordered = std::popcount(a) < std::popcount(b) ||
                       (std::popcount(a) == std::popcount(b) && a < b);
        CHECK(ordered);
    }
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(cut_sets(Graph(25, {})), size_error);
}
