#include "konig/classes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace konig {

namespace {

// dp[mask] = set of vertices at which a path covering exactly `mask` can end,
// starting anywhere in `sources`
std::vector<std::uint32_t> path_dp(const Graph& g, std::uint32_t sources) {
    int n = g.n();
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v)
        if ((sources >> v) & 1) dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        std::uint32_t scan = ends;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint32_t ext = static_cast<std::uint32_t>(g.adj(v + 1)) & ~mask;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return dp;
}

std::vector<int> recover_path(const Graph& g, const std::vector<std::uint32_t>& dp,
                              std::uint32_t mask, int last) {
    std::vector<int> order;
    while (mask) {
        order.push_back(last + 1);
        std::uint32_t prevmask = mask & ~(std::uint32_t{1} << last);
        if (!prevmask) break;
        std::uint32_t cand =
            dp[prevmask] & static_cast<std::uint32_t>(g.adj(last + 1));
        last = std::countr_zero(cand);
        mask = prevmask;
    }
    std::reverse(order.begin(), order.end());
    return order;
}

void require_ham_budget(const Graph& g) {
    if (g.n() > 20) throw size_error("Hamiltonian search capped at n <= 20");
}

} // namespace

bool is_traceable(const Graph& g) { return hamiltonian_path(g).has_value(); }
bool is_hamiltonian(const Graph& g) { return hamiltonian_cycle(g).has_value(); }

std::optional<std::vector<int>> hamiltonian_path(const Graph& g) {
    require_ham_budget(g);
    int n = g.n();
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<int>{1};
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    auto dp = path_dp(g, full);
    if (!dp[full]) return std::nullopt;
    return recover_path(g, dp, full, std::countr_zero(dp[full]));
}

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g) {
    require_ham_budget(g);
    int n = g.n();
    if (n < 3) return std::nullopt;
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    // a Hamiltonian cycle is a spanning path rooted at vertex 1 whose other
    // endpoint is adjacent to vertex 1
    auto dp = path_dp(g, std::uint32_t{1});
    std::uint32_t ends = dp[full] & static_cast<std::uint32_t>(g.adj(1));
    if (!ends) return std::nullopt;
    int last = std::countr_zero(ends);
    auto order = recover_path(g, dp, full, last); // runs last -> ... -> 1
    std::reverse(order.begin(), order.end());
    return order;
}

Graph permutation_graph(const std::vector<int>& rho) {
    int m = static_cast<int>(rho.size());
    std::vector<int> pos(m + 1, 0);
    for (int i = 0; i < m; ++i) {
        int v = rho[i];
        if (v < 1 || v > m || pos[v]) throw input_error("rho is not a permutation of 1..m");
        pos[v] = i + 1;
    }
    std::vector<Edge> edges;
    for (int v = 1; v <= m; ++v)
        for (int w = v + 1; w <= m; ++w)
            if (pos[w] < pos[v]) edges.push_back({v, w});
    return Graph(m, std::move(edges));
}

Graph interval_graph(const std::vector<std::pair<int, int>>& intervals) {
    int m = static_cast<int>(intervals.size());
    for (auto [lo, hi] : intervals)
        if (lo > hi) throw input_error("interval with lo > hi");
    std::vector<Edge> edges;
    for (int v = 1; v <= m; ++v)
        for (int w = v + 1; w <= m; ++w) {
            auto [a, b] = intervals[v - 1];
            auto [c, d] = intervals[w - 1];
            if (std::max(a, c) <= std::min(b, d)) edges.push_back({v, w});
        }
    return Graph(m, std::move(edges));
}

namespace {

// scan all induced 4-subsets for a P_4 (and optionally C_4)
bool has_induced_p4_or_c4(const Graph& g, bool also_c4, bool* found_c4) {
    int n = g.n();
    if (n > 10) throw size_error("induced-subgraph recognition capped at n <= 10");
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    int vs[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(vs[i], vs[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges == 3) {
                        // P_4 iff degrees are 1,1,2,2 (rules out K_{1,3}, triangle+isolate)
                        int ones = 0, twos = 0;
                        for (int dd : deg) {
                            ones += (dd == 1);
                            twos += (dd == 2);
                        }
                        if (ones == 2 && twos == 2) return true;
                    }
                    if (also_c4 && edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 &&
                        deg[3] == 2) {
                        if (found_c4) *found_c4 = true;
                        return true;
                    }
                }
    return false;
}

} // namespace

bool is_cograph(const Graph& g) { return !has_induced_p4_or_c4(g, false, nullptr); }

bool is_trivially_perfect(const Graph& g) { return !has_induced_p4_or_c4(g, true, nullptr); }

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n() + 1, -1);
    for (int s = 1; s <= g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int v = queue[q];
            for (int w : set_to_vertices(g.adj(v))) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph tp_build(const TPNode& node) {
    switch (node.kind) {
        case TPNode::leaf:
            return Graph(1, {});
        case TPNode::disjoint: {
            if (node.children.empty()) throw input_error("empty disjoint-union node");
            Graph g = tp_build(*node.children.front());
            for (std::size_t i = 1; i < node.children.size(); ++i)
                g = disjoint_union(g, tp_build(*node.children[i]));
            return g;
        }
        case TPNode::join: {
            Graph base = tp_build(*node.base);
            std::vector<Edge> edges = base.edges();
            int v = base.n() + 1;
            for (int u = 1; u <= base.n(); ++u) edges.push_back({u, v});
            return Graph(v, std::move(edges));
        }
    }
    throw input_error("bad construction node");
}

namespace {

LFCover validated(const Graph& g, LinearForest f, VertexSet s, const char* what) {
    std::sort(f.edges.begin(), f.edges.end());
    auto check = verify_lf_cover(g, f, s);
    if (!check.ok)
        throw theorem_violation(std::string(what) + " construction failed validation: " +
                                check.diagnostic);
    return LFCover{std::move(f), s};
}

} // namespace

LFCover traceable_cover(const Graph& g) {
    auto path = hamiltonian_path(g);
    if (!path) throw input_error("traceable_cover: graph is not traceable");
    LinearForest f{g.n(), {}};
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
        int a = (*path)[i], b = (*path)[i + 1];
        f.edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return validated(g, std::move(f), 0, "traceable");
}

LFCover complete_bipartite_cover(int a, int b) {
    // labels of K_{a,b}: part A is 1..a, part B is a+1..a+b
    Graph g = complete_bipartite_graph(a, b);
    // alternate big_1 small_1 big_2 small_2 ...: 2*min-1 edges when a = b
    // (a spanning path), otherwise 2*min edges ending in the bigger part
    auto big = [&](int i) { return a >= b ? i : a + i; };
    auto small = [&](int j) { return a >= b ? a + j : j; };
    int lo = std::min(a, b), hi = std::max(a, b);
    LinearForest f{g.n(), {}};
    for (int i = 1; i <= lo; ++i) {
        f.edges.push_back({std::min(big(i), small(i)), std::max(big(i), small(i))});
        if (i < hi)
            f.edges.push_back({std::min(small(i), big(i + 1)), std::max(small(i), big(i + 1))});
    }
    VertexSet s = 0;
    if (hi > lo)
        for (int j = 1; j <= lo; ++j) s |= vbit(small(j));
    return validated(g, std::move(f), s, "complete-bipartite");
}

namespace {

LFCover tp_cover_impl(const TPNode& node, const Graph& g) {
    switch (node.kind) {
        case TPNode::leaf:
            return LFCover{LinearForest{1, {}}, 0};
        case TPNode::disjoint: {
            LinearForest f{g.n(), {}};
            VertexSet s = 0;
            int offset = 0;
            for (const auto& child : node.children) {
                Graph cg = tp_build(*child);
                LFCover cc = tp_cover_impl(*child, cg);
                for (auto [i, j] : cc.forest.edges) f.edges.push_back({i + offset, j + offset});
                s |= cc.s << offset;
                offset += cg.n();
            }
            return LFCover{std::move(f), s};
        }
        case TPNode::join: {
            Graph base = tp_build(*node.base);
            LFCover bc = tp_cover_impl(*node.base, base);
            int v = base.n() + 1;
            Graph fg = bc.forest.as_graph();
            auto comps = component_masks(fg);
            if (comps.size() <= 1) {
                // base forest is a spanning path, so the join stays traceable
                return traceable_cover(g);
            }
            // join two leaves from distinct forest components through v
            auto leaf_of = [&](VertexSet comp) {
                for (int u : set_to_vertices(comp))
                    if (fg.degree(u) <= 1) return u;
                return 0;
            };
            int l1 = leaf_of(comps[0]), l2 = leaf_of(comps[1]);
            LinearForest f{g.n(), bc.forest.edges};
            f.edges.push_back({std::min(l1, v), std::max(l1, v)});
            f.edges.push_back({std::min(l2, v), std::max(l2, v)});
            return LFCover{std::move(f), bc.s | vbit(v)};
        }
    }
    throw input_error("bad construction node");
}

} // namespace

LFCover trivially_perfect_cover(const TPNode& node) {
    Graph g = tp_build(node);
    LFCover c = tp_cover_impl(node, g);
    c.forest.n = g.n();
    return validated(g, std::move(c.forest), c.s, "trivially-perfect");
}

namespace {

// union/join closure up to n vertices, deduped by canonical key
std::vector<Graph> cograph_closure(int n, bool joins_only_with_k1) {
    std::vector<std::vector<Graph>> by_size(n + 1);
    by_size[1] = {Graph(1, {})};
    std::vector<std::unordered_set<std::uint64_t>> seen(n + 1);
    seen[1].insert(canon_key(by_size[1][0]));
    auto add = [&](Graph g) {
        int k = g.n();
        if (seen[k].insert(canon_key(g)).second) by_size[k].push_back(std::move(g));
    };
    for (int k = 2; k <= n; ++k) {
        // disjoint unions of smaller pieces
        for (int a = 1; a <= k / 2; ++a)
            for (const auto& ga : by_size[a])
                for (const auto& gb : by_size[k - a]) add(disjoint_union(ga, gb));
        // joins
        if (joins_only_with_k1) {
            for (const auto& gb : by_size[k - 1]) {
                std::vector<Edge> e = gb.edges();
                for (int u = 1; u < k; ++u) e.push_back({u, k});
                add(Graph(k, std::move(e)));
            }
        } else {
            for (int a = 1; a <= k / 2; ++a)
                for (const auto& ga : by_size[a])
                    for (const auto& gb : by_size[k - a]) {
                        std::vector<Edge> e = ga.edges();
                        for (auto [i, j] : gb.edges()) e.push_back({i + a, j + a});
                        for (int u = 1; u <= a; ++u)
                            for (int w = a + 1; w <= k; ++w) e.push_back({u, w});
                        add(Graph(k, std::move(e)));
                    }
        }
    }
    return by_size[n];
}

} // namespace

std::vector<Graph> enumerate_cographs(int n) { return cograph_closure(n, false); }

std::vector<Graph> enumerate_trivially_perfect(int n) { return cograph_closure(n, true); }

std::vector<Graph> enumerate_permutation_graphs(int n) {
    std::vector<int> rho(n);
    std::iota(rho.begin(), rho.end(), 1);
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    do {
        Graph g = permutation_graph(rho);
        if (seen.insert(canon_key(g)).second) out.push_back(std::move(g));
    } while (std::next_permutation(rho.begin(), rho.end()));
    return out;
}

std::vector<Graph> enumerate_interval_graphs(int n) {
    if (n > 6) throw size_error("interval enumeration capped at 6 intervals");
    // enumerate endpoint orderings: at each of 2n steps either open the next
    // interval (canonical labels follow opening order) or close an open one
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<int, int>> iv(n, {0, 0});
    std::vector<int> open;
    auto rec = [&](auto&& self, int opened, int closed, int time) -> void {
        if (closed == n) {
            Graph g = interval_graph(iv);
            if (seen.insert(canon_key(g)).second) out.push_back(g);
            return;
        }
        if (opened < n) {
            iv[opened].first = time;
            open.push_back(opened);
            self(self, opened + 1, closed, time + 1);
            open.pop_back();
        }
        for (std::size_t k = 0; k < open.size(); ++k) {
            int idx = open[k];
            iv[idx].second = time;
            open.erase(open.begin() + k);
            self(self, opened, closed + 1, time + 1);
            open.insert(open.begin() + k, idx);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

std::vector<Graph> enumerate_bipartite_graphs(int n) {
    if (n > 9) throw size_error("bipartite enumeration capped at n <= 9");
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen; // global dedup across part splits
    for (int a = n; a >= (n + 1) / 2; --a) {
        int b = n - a;
        int cells = a * b;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
            std::vector<Edge> edges;
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j)
                    if ((mask >> (i * b + j)) & 1) edges.push_back({i + 1, a + j + 1});
            Graph g(n, std::move(edges));
            if (seen.insert(canon_key(g)).second) out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace konig
