#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "konig/graph.hpp"

using namespace konig;

TEST_CASE("vertex set helpers") {
    CHECK(vbit(1) == 1);
    CHECK(vbit(3) == 4);
    CHECK(vin(vbit(2) | vbit(5), 5));
    CHECK(!vin(vbit(2) | vbit(5), 3));
    CHECK(set_to_vertices(0b1011) == std::vector<int>{1, 2, 4});
    CHECK(vertices_to_set({1, 2, 4}) == 0b1011);
}

TEST_CASE("graph construction and validation") {
    Graph g(4, {{3, 4}, {2, 1}});
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {3, 4}}); // normalized and sorted
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(1, 3));
    CHECK(g.degree(1) == 1);
    CHECK(g.vertex_mask() == 0b1111);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), input_error); // duplicate
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{0, 2}}), input_error);
    CHECK_THROWS_AS(Graph(65, {}), input_error); // beyond the bitset representation
    CHECK(Graph{}.is_null());
}

TEST_CASE("edge list parse and format round trip") {
    std::string text = "# a comment\nn 4\ne 1 2\ne 3 4 # trailing\n";
    Graph g = parse_graph(text);
    CHECK(g.n() == 4);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(parse_graph(format_graph(g)) == g);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), input_error);     // edge before header
    CHECK_THROWS_AS(parse_graph("n 3\ne 1\n"), input_error);  // malformed edge
    CHECK_THROWS_AS(parse_graph("n 3\nq 1 2\n"), input_error);
    CHECK_THROWS_AS(parse_graph(""), input_error);
}

TEST_CASE("graph6 round trip") {
    for (const Graph& g : {path_graph(5), complete_graph(4), net_graph(), Graph(1, {})}) {
        Graph back = parse_graph6(to_graph6(g));
        CHECK(back == g);
    }
    // standard encoding of K_4 (n=4 -> 'C', all six bits set)
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK_THROWS_AS(parse_graph6(""), input_error);
}

namespace {

// independent component oracle: repeated closure instead of BFS
int components_oracle(const Graph& g, VertexSet removed) {
    std::vector<int> verts;
    for (int v = 1; v <= g.n(); ++v)
        if (!vin(removed, v)) verts.push_back(v);
    std::map<int, int> rep;
    for (int v : verts) rep[v] = v;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [i, j] : g.edges()) {
            if (vin(removed, i) || vin(removed, j)) continue;
            int a = rep[i], b = rep[j];
            if (a != b) {
                int m = std::min(a, b);
                for (auto& [v, r] : rep)
                    if (r == a || r == b) r = m;
                changed = true;
            }
        }
    }
    std::set<int> reps;
    for (auto& [v, r] : rep) reps.insert(r);
    return static_cast<int>(reps.size());
}

} // namespace

TEST_CASE("components agree with closure oracle on all graphs n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
                CHECK(component_count(g, s) == components_oracle(g, s));
            }
        }
    }
}

TEST_CASE("component masks partition the remaining vertices") {
    Graph g = net_graph();
    auto masks = component_masks(g, vbit(1));
    VertexSet all = 0;
    for (VertexSet m : masks) {
        CHECK((all & m) == 0);
        all |= m;
    }
    CHECK(all == (g.vertex_mask() & ~vbit(1)));
}

TEST_CASE("tree and connectivity checks") {
    CHECK(is_connected(path_graph(4)));
    CHECK(is_tree(path_graph(4)));
    CHECK(!is_tree(cycle_graph(4)));
    CHECK(!is_tree(disjoint_union(path_graph(2), path_graph(2))));
    CHECK(!is_connected(disjoint_union(path_graph(2), path_graph(2))));
    CHECK(is_tree(Graph(1, {})));
}

TEST_CASE("canonical form is a full-orbit minimum and an isomorphism invariant") {
    // relabeled versions collapse, distinct graphs do not
    Graph p4 = path_graph(4);
    Graph p4_shuffled = relabel(p4, {3, 1, 4, 2});
    CHECK(p4.edges() != p4_shuffled.edges());
    CHECK(canonical_form(p4) == canonical_form(p4_shuffled));
    CHECK(canonical_form(p4) != canonical_form(cycle_graph(4)));
    CHECK_THROWS_AS(canonical_form(Graph(11, {})), size_error);
}

TEST_CASE("canon_key agrees with canonical_form as an invariant, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::map<std::uint64_t, std::uint64_t> seen; // canonical_form -> canon_key
        for (const Graph& g : enumerate_graphs(n)) {
            std::uint64_t cf = canonical_form(g), ck = canon_key(g);
            CHECK(!seen.count(cf));
            seen[cf] = ck;
            // keys are also distinct across classes
            for (auto& [f, k] : seen)
                if (f != cf) CHECK(k != ck);
            // invariance under relabeling
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            std::reverse(perm.begin(), perm.end());
            CHECK(canon_key(relabel(g, perm)) == ck);
            CHECK(canonical_form(relabel(g, perm)) == cf);
        }
    }
}

TEST_CASE("canon_relabel produces an isomorphic graph realizing the key") {
    for (const Graph& g : enumerate_graphs(5)) {
        Graph c = canon_relabel(g);
        CHECK(c.n() == g.n());
        CHECK(c.edge_count() == g.edge_count());
        CHECK(canon_key(c) == canon_key(g));
    }
}

TEST_CASE("enumeration counts match the standard tables") {
    // unlabeled simple graphs: OEIS A000088; connected: A001349
    const int all[] = {1, 2, 4, 11, 34, 156, 1044};
    const int conn[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(static_cast<int>(enumerate_graphs(n).size()) == all[n - 1]);
        CHECK(static_cast<int>(enumerate_graphs(n, true).size()) == conn[n - 1]);
    }
    CHECK_THROWS_AS(enumerate_graphs(8), size_error);
}

TEST_CASE("standard constructions") {
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(4).edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_bipartite_graph(3, 2).edge_count() == 6);
    CHECK(complete_bipartite_graph(3, 2).has_edge(1, 4));
    CHECK(!complete_bipartite_graph(3, 2).has_edge(1, 2));
    Graph net = net_graph();
    CHECK(net.n() == 6);
    CHECK(net.edge_count() == 6);
    CHECK(standard_graph("path", {4}) == path_graph(4));
    CHECK(standard_graph("net", {}) == net_graph());
    CHECK_THROWS_AS(standard_graph("mystery", {}), input_error);
}

TEST_CASE("disjoint union and relabel") {
    Graph u = disjoint_union(path_graph(2), path_graph(3));
    CHECK(u.n() == 5);
    CHECK(u.edges() == std::vector<Edge>{{1, 2}, {3, 4}, {4, 5}});
    Graph r = relabel(path_graph(3), {2, 3, 1}); // 1->2, 2->3, 3->1
    CHECK(r.edges() == std::vector<Edge>{{1, 3}, {2, 3}});
    CHECK_THROWS_AS(relabel(path_graph(3), {1, 1, 2}), input_error);
}
