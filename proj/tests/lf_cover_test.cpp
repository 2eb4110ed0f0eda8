#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "konig/cutset.hpp"
#include "konig/lf_cover.hpp"

using namespace konig;

TEST_CASE("verify_lf_cover criteria and diagnostics") {
    Graph p4 = path_graph(4);
    LinearForest full{4, p4.edges()};
    CHECK(verify_lf_cover(p4, full, 0).ok);
    CHECK(verify_lf_cover(p4, full, vbit(2)).ok);
    // leaves of the forest may not enter S
    auto leaf = verify_lf_cover(p4, full, vbit(1));
    CHECK(!leaf.ok);
    CHECK(!leaf.diagnostic.empty());
    // S must be independent in F
    CHECK(!verify_lf_cover(p4, full, vbit(2) | vbit(3)).ok);
    // F must be a maximal linear forest of g
    CHECK(!verify_lf_cover(p4, LinearForest{4, {{1, 2}, {2, 3}}}, 0).ok);
    CHECK(!verify_lf_cover(p4, LinearForest{4, {{1, 3}}}, 0).ok);
    // uncovered edge: C_4 with forest missing {1,4}, S empty fails criterion 3
    Graph c4 = cycle_graph(4);
    LinearForest f{4, {{1, 2}, {2, 3}, {3, 4}}};
    CHECK(verify_lf_cover(c4, f, 0).ok); // endpoints 1,4 in one component of F
    LinearForest f2{4, {{1, 2}, {3, 4}}};
    CHECK(!verify_lf_cover(c4, f2, 0).ok); // not maximal
}

TEST_CASE("a path with S = {} covers the cycle") {
    for (int n = 3; n <= 8; ++n) {
        Graph cn = cycle_graph(n);
        std::vector<Edge> pe;
        for (int i = 1; i < n; ++i) pe.push_back({i, i + 1});
        CHECK(verify_lf_cover(cn, LinearForest{n, pe}, 0).ok);
    }
}

TEST_CASE("worked example: unique maximal forest, six covering sets") {
    Graph g(8, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 6}, {4, 7}, {4, 8}});
    auto forests = all_max_linear_forests(g);
    REQUIRE(forests.size() == 1);
    LinearForest f = forests[0];
    CHECK(f.edges == std::vector<Edge>{{1, 2}, {1, 3}, {2, 5}, {3, 6}, {4, 7}, {4, 8}});
    std::vector<VertexSet> expect = {
        vbit(4), vbit(1) | vbit(4), vbit(2) | vbit(3), vbit(2) | vbit(4),
        vbit(3) | vbit(4), vbit(2) | vbit(3) | vbit(4)};
    // listing order: cardinality, then lexicographic on sorted vertex lists
    std::sort(expect.begin(), expect.end(), [](VertexSet a, VertexSet b) {
        auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : set_to_vertices(a) < set_to_vertices(b);
    });
    CHECK(all_covering_sets(g, f) == expect);
}

TEST_CASE("worked example: two maximal forests, same covering sets") {
    Graph g(8, {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {3, 4}, {3, 7}, {4, 5}, {4, 8}});
    auto forests = all_max_linear_forests(g);
    REQUIRE(forests.size() == 2);
    LinearForest f1{8, {{1, 2}, {1, 5}, {2, 3}, {3, 7}, {4, 5}, {4, 8}}};
    LinearForest f2{8, {{1, 2}, {1, 6}, {2, 3}, {3, 7}, {4, 5}, {4, 8}}};
    CHECK(forests[0] == f1);
    CHECK(forests[1] == f2);
    std::vector<VertexSet> expect = {
        vbit(1) | vbit(3), vbit(1) | vbit(4), vbit(1) | vbit(3) | vbit(4)};
    CHECK(all_covering_sets(g, f1) == expect);
    CHECK(all_covering_sets(g, f2) == expect);
}

TEST_CASE("the net has no LF-cover") {
    Graph net = net_graph();
    for (const auto& f : all_max_linear_forests(net))
        CHECK(all_covering_sets(net, f).empty());
    CHECK(!find_lf_cover(net).has_value());
}

TEST_CASE("find_lf_cover returns a verified minimum witness") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            auto cover = find_lf_cover(g);
            LinearForest f = max_linear_forest(g);
            auto all = all_covering_sets(g, f);
            if (all.empty()) {
                CHECK(!cover.has_value());
            } else {
                REQUIRE(cover.has_value());
                CHECK(cover->forest == f);
                CHECK(cover->s == all.front()); // popcount-then-value least
                CHECK(verify_lf_cover(g, cover->forest, cover->s).ok);
            }
        }
    }
}

TEST_CASE("covering sets do not depend on the choice of maximal forest, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            auto forests = all_max_linear_forests(g);
            auto ref = all_covering_sets(g, forests[0]);
            for (size_t k = 1; k < forests.size(); ++k)
                CHECK(all_covering_sets(g, forests[k]) == ref);
        }
    }
}

TEST_CASE("covering sets are exactly the cut sets of F whose prime contains every edge binomial") {
    // combinatorial restatement: S covers iff S is a cut set of F and every
    // g-edge has both ends in one component of F \ S or an end in S
    for (const Graph& g : enumerate_graphs(4)) {
        for (const auto& f : all_max_linear_forests(g)) {
            Graph fg = f.as_graph();
            auto cov = all_covering_sets(g, f);
            std::set<VertexSet> covering(cov.begin(), cov.end());
            for (VertexSet s = 0; s < (VertexSet{1} << g.n()); ++s) {
                bool in_cg = is_cut_set(fg, s);
                bool contained = true;
                auto masks = component_masks(fg, s);
                for (const auto& [i, j] : g.edges()) {
                    if (vin(s, i) || vin(s, j)) continue;
                    bool together = false;
                    for (VertexSet m : masks)
                        if (vin(m, i) && vin(m, j)) together = true;
                    if (!together) { contained = false; break; }
                }
                CHECK(covering.count(s) == (in_cg && contained ? 1u : 0u));
            }
        }
    }
}

TEST_CASE("is_konig verdict on all graphs n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            KonigVerdict v = is_konig(g);
            CHECK(v.grade == grade(g));
            CHECK(v.lf == lf_number(g));
            CHECK(v.konig == (v.grade == v.lf));
            CHECK(v.cover.has_value() == v.konig);
            if (v.cover)
                CHECK(verify_lf_cover(g, v.cover->forest, v.cover->s).ok);
        }
    }
}

TEST_CASE("net verdict: grade 5, LF 4, not of König type") {
    KonigVerdict v = is_konig(net_graph());
    CHECK(v.grade == 5);
    CHECK(v.lf == 4);
    CHECK(!v.konig);
    CHECK(!v.cover.has_value());
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(all_covering_sets(Graph(11, {}), LinearForest{11, {}}), size_error);
}
