#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "konig/cutset.hpp"
#include "konig/tree_cover.hpp"

using namespace konig;

TEST_CASE("extremal branch points") {
    CHECK(extremal_branch_points(path_graph(6)).empty());
    // star: centre is the unique branch point
    CHECK(extremal_branch_points(complete_bipartite_graph(1, 4)) == std::vector<int>{1});
    // caterpillar with two branch points, both extremal
    Graph cat(8, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}, {3, 7}, {3, 8}});
    CHECK(extremal_branch_points(cat) == std::vector<int>{2, 3});
}

TEST_CASE("worked 11-vertex tree: 7-edge forest with S = {3, 7}") {
    Graph t(11, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 8},
                 {7, 9}, {7, 10}, {7, 11}});
    REQUIRE(is_tree(t));
    TreeCoverTrace tr = tree_lf_cover(t);
    CHECK(verify_lf_cover(t, tr.result.forest, tr.result.s).ok);
    CHECK(tr.result.forest.edges.size() == 7);
    CHECK(static_cast<int>(tr.result.forest.edges.size()) == grade(t));
    CHECK(tr.result.s == (vbit(3) | vbit(7)));
    CHECK(!format_trace(tr).empty());
}

TEST_CASE("paths are covered with S = {} and every edge kept") {
    for (int n = 1; n <= 8; ++n) {
        TreeCoverTrace tr = tree_lf_cover(path_graph(n));
        CHECK(tr.result.s == 0);
        CHECK(static_cast<int>(tr.result.forest.edges.size()) == std::max(0, n - 1));
        CHECK(tr.steps.empty());
    }
}

TEST_CASE("stars: two edges kept, centre in S for degree >= 3") {
    for (int k = 3; k <= 6; ++k) {
        Graph star = complete_bipartite_graph(1, k);
        TreeCoverTrace tr = tree_lf_cover(star);
        CHECK(verify_lf_cover(star, tr.result.forest, tr.result.s).ok);
        CHECK(tr.result.forest.edges.size() == 2);
        CHECK(static_cast<int>(tr.result.forest.edges.size()) == grade(star));
        CHECK(tr.result.s == vbit(1));
    }
}

TEST_CASE("spider with three legs of length two uses the join case") {
    // centre 1, legs 1-2-3, 1-4-5, 1-6-7
    Graph sp(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}});
    TreeCoverTrace tr = tree_lf_cover(sp);
    CHECK(verify_lf_cover(sp, tr.result.forest, tr.result.s).ok);
    CHECK(static_cast<int>(tr.result.forest.edges.size()) == grade(sp));
    REQUIRE(!tr.steps.empty());
    CHECK(tr.steps[0].case_no == 3);
    CHECK(tr.steps[0].branch_point == 1);
    CHECK(vin(tr.result.s, 1));
}

TEST_CASE("two adjacent leaves trigger the leaf-pair case") {
    Graph t(6, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}});
    TreeCoverTrace tr = tree_lf_cover(t);
    CHECK(verify_lf_cover(t, tr.result.forest, tr.result.s).ok);
    REQUIRE(!tr.steps.empty());
    CHECK(tr.steps[0].case_no == 2);
    CHECK(tr.steps[0].branch_point == 3);
}

TEST_CASE("tree enumeration matches the unlabeled tree counts") {
    // number of unlabeled trees: OEIS A000055
    const int counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(static_cast<int>(trees.size()) == counts[n - 1]);
        std::set<std::uint64_t> keys;
        for (const Graph& t : trees) {
            CHECK(t.n() == n);
            CHECK(is_tree(t));
            CHECK(keys.insert(canon_key(t)).second);
        }
    }
}

TEST_CASE("leaf augmentation agrees with the Prufer route, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        auto a = enumerate_trees(n);
        auto b = enumerate_trees_prufer(n);
        std::set<std::uint64_t> ka, kb;
        for (const Graph& t : a) ka.insert(canon_key(t));
        for (const Graph& t : b) kb.insert(canon_key(t));
        CHECK(ka == kb);
    }
}

TEST_CASE("prufer_decode on a known sequence") {
    // sequence (4,4) on 4 vertices decodes to the star at 4
    Graph t = prufer_decode(4, {4, 4});
    CHECK(t.edges() == std::vector<Edge>{{1, 4}, {2, 4}, {3, 4}});
    CHECK_THROWS_AS(prufer_decode(4, {1}), input_error);
    CHECK_THROWS_AS(prufer_decode(4, {0, 1}), input_error);
}

TEST_CASE("construction is valid with |F| = grade on every tree up to 9 vertices") {
    for (int n = 1; n <= 9; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            TreeCoverTrace tr = tree_lf_cover(t);
            auto check = verify_lf_cover(t, tr.result.forest, tr.result.s);
            INFO(to_graph6(t), ": ", check.diagnostic);
            CHECK(check.ok);
            CHECK(static_cast<int>(tr.result.forest.edges.size()) == grade(t));
        }
    }
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(tree_lf_cover(cycle_graph(4)), input_error);
    CHECK_THROWS_AS(enumerate_trees_prufer(10), size_error);
}
