#include "konig/linear_forest.hpp"

#include <algorithm>
#include <numeric>

namespace konig {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// DFS over edges in lexicographic order, include-branch first, so subsets of
// any fixed size are visited in increasing order of their sorted edge lists.
struct Search {
    const std::vector<Edge>& edges;
    int n;
    bool collect_all; // record every optimum instead of the first
    int best = -1;
    std::vector<Edge> best_edges;
    std::vector<std::vector<Edge>> optima;
    std::vector<int> deg;
    std::vector<Edge> chosen;
    UnionFind uf;

    Search(const Graph& g, bool all)
        : edges(g.edges()), n(g.n()), collect_all(all), deg(n + 1, 0), uf(n + 1) {}

    // an edge still consumes two degree slots; also a forest has < n edges
    int bound(std::size_t next) const {
        int free_deg = 0;
        for (int v = 1; v <= n; ++v) free_deg += std::max(0, 2 - deg[v]);
        int cap = std::min(free_deg / 2, n - 1 - static_cast<int>(chosen.size()));
        return static_cast<int>(chosen.size()) +
               std::min(cap, static_cast<int>(edges.size() - next));
    }

    void record() {
        int sz = static_cast<int>(chosen.size());
        if (sz > best) {
            best = sz;
            best_edges = chosen;
            if (collect_all) optima.assign(1, chosen);
        } else if (collect_all && sz == best) {
            optima.push_back(chosen);
        }
    }

    // record only at full depth: every subset reaches the leaf of its
    // exclude-spine exactly once, so optima are collected without duplicates
    void dfs(std::size_t next) {
        if (next == edges.size()) {
            record();
            return;
        }
        int b = bound(next);
        if (b < best || (!collect_all && b == best)) return;
        auto [i, j] = edges[next];
        if (deg[i] < 2 && deg[j] < 2 && uf.find(i) != uf.find(j)) {
            auto saved = uf.parent;
            uf.unite(i, j);
            ++deg[i];
            ++deg[j];
            chosen.push_back(edges[next]);
            dfs(next + 1);
            chosen.pop_back();
            --deg[i];
            --deg[j];
            uf.parent = std::move(saved);
        }
        dfs(next + 1);
    }
};

Search run_search(const Graph& g, bool all) {
    if (g.edge_count() > 40) throw size_error("linear-forest search capped at |E| <= 40");
    Search s(g, all);
    s.dfs(0);
    return s;
}

} // namespace

bool is_linear_forest(const Graph& host, const std::vector<Edge>& edges) {
    std::vector<int> deg(host.n() + 1, 0);
    UnionFind uf(host.n() + 1);
    for (auto [i, j] : edges) {
        if (!host.has_edge(i, j)) return false;
        if (++deg[i] > 2 || ++deg[j] > 2) return false;
        if (!uf.unite(i, j)) return false; // cycle
    }
    return true;
}

int lf_number(const Graph& g) { return run_search(g, false).best; }

LinearForest max_linear_forest(const Graph& g) {
    auto s = run_search(g, false);
    return LinearForest{g.n(), std::move(s.best_edges)};
}

std::vector<LinearForest> all_max_linear_forests(const Graph& g) {
    if (g.n() > 8) throw size_error("all_max_linear_forests capped at n <= 8");
    auto s = run_search(g, true);
    std::vector<LinearForest> out;
    out.reserve(s.optima.size());
    for (auto& e : s.optima) out.push_back(LinearForest{g.n(), std::move(e)});
    return out;
}

} // namespace konig
