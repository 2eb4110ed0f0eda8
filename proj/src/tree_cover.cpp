#include "konig/tree_cover.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "konig/cutset.hpp"

namespace konig {

std::vector<int> extremal_branch_points(const Graph& t) {
    if (!is_tree(t)) throw input_error("extremal_branch_points: input is not a tree");
    std::vector<int> out;
    for (int v = 1; v <= t.n(); ++v) {
        if (t.degree(v) < 3) continue;
        int adj_branch = 0;
        for (int w : set_to_vertices(t.adj(v)))
            if (t.degree(w) >= 3) ++adj_branch;
        if (adj_branch <= 1) out.push_back(v);
    }
    return out;
}

namespace {

// Mutable view of the shrinking forest over the original labels.
struct Shrink {
    const Graph& t;
    VertexSet alive;

    std::uint64_t adj(int v) const { return t.adj(v) & alive; }
    int deg(int v) const { return std::popcount(adj(v)); }
};

// The hanging path starting at head (a neighbor of b all of whose chain runs
// through degree-<=2 vertices away from b), as an ordered vertex list.
std::vector<int> hanging_path(const Shrink& s, int b, int head) {
    std::vector<int> path{head};
    int prev = b, cur = head;
    while (s.deg(cur) == 2) {
        VertexSet next = s.adj(cur) & ~vbit(prev);
        prev = cur;
        cur = std::countr_zero(next) + 1;
        path.push_back(cur);
    }
    return path;
}

} // namespace

TreeCoverTrace tree_lf_cover(const Graph& t) {
    if (!is_tree(t)) throw input_error("tree_lf_cover: input is not a tree");
    TreeCoverTrace trace;
    std::vector<Edge> forest_edges;
    VertexSet cover_s = 0;
    Shrink s{t, t.vertex_mask()};

    while (s.alive) {
        // components of the remaining forest, smallest-index first
        auto comps = component_masks(t, ~s.alive & t.vertex_mask());
        VertexSet comp = comps.front();

        // locate a branch point inside this component
        int deepest = 0;
        {
            // BFS from the smallest vertex; take the deepest extremal branch
            // point (all of its away-side chains are then pure hanging paths)
            int root = std::countr_zero(comp) + 1;
            std::vector<int> depth(t.n() + 1, -1);
            std::vector<int> order{root};
            depth[root] = 0;
            for (std::size_t q = 0; q < order.size(); ++q) {
                int v = order[q];
                for (int w : set_to_vertices(s.adj(v) & comp))
                    if (depth[w] < 0) {
                        depth[w] = depth[v] + 1;
                        order.push_back(w);
                    }
            }
            int best_depth = -1;
            for (int v : set_to_vertices(comp))
                if (s.deg(v) >= 3 &&
                    (depth[v] > best_depth || (depth[v] == best_depth && v < deepest))) {
                    deepest = v;
                    best_depth = depth[v];
                }
        }

        if (deepest == 0) {
            // the component is a path (possibly a single vertex): absorb it
            TreeCoverStep step;
            step.case_no = 0;
            for (int v : set_to_vertices(comp)) {
                step.removed_vertices.push_back(v);
                for (int w : set_to_vertices(s.adj(v) & comp))
                    if (w > v) forest_edges.push_back({v, w});
            }
            s.alive &= ~comp;
            trace.steps.push_back(std::move(step));
            continue;
        }

        int b = deepest;
        std::vector<int> leaves;
        for (int w : set_to_vertices(s.adj(b)))
            if (s.deg(w) == 1) leaves.push_back(w);

        if (leaves.size() >= 2) {
            // main case: attach the two smallest leaf edges at b, remove b and all its
            // leaves
            TreeCoverStep step;
            step.case_no = 2;
            step.branch_point = b;
            step.leaves_used = {leaves[0], leaves[1]};
            forest_edges.push_back({std::min(b, leaves[0]), std::max(b, leaves[0])});
            forest_edges.push_back({std::min(b, leaves[1]), std::max(b, leaves[1])});
            cover_s |= vbit(b);
            step.removed_vertices.push_back(b);
            s.alive &= ~vbit(b);
            for (int l : leaves) {
                step.removed_vertices.push_back(l);
                s.alive &= ~vbit(l);
            }
            trace.steps.push_back(std::move(step));
        } else {
            // completion step: b is a deepest branch point, so at least two of
            // its chains are pure hanging paths; join the two shortest through
            // b into one forest path and let b cover its remaining edges
            std::vector<std::vector<int>> hangs;
            for (int w : set_to_vertices(s.adj(b))) {
                auto p = hanging_path(s, b, w);
                if (s.deg(p.back()) == 1) hangs.push_back(std::move(p)); // ends at a leaf
            }
            std::sort(hangs.begin(), hangs.end(), [](const auto& a, const auto& c) {
                return a.size() != c.size() ? a.size() < c.size() : a.front() < c.front();
            });
            TreeCoverStep step;
            step.case_no = 3;
            step.branch_point = b;
            step.leaves_used = {hangs[0].back(), hangs[1].back()};
            cover_s |= vbit(b);
            step.removed_vertices.push_back(b);
            s.alive &= ~vbit(b);
            for (int side = 0; side < 2; ++side) {
                int prev = b;
                for (int v : hangs[side]) {
                    forest_edges.push_back({std::min(prev, v), std::max(prev, v)});
                    step.removed_vertices.push_back(v);
                    s.alive &= ~vbit(v);
                    prev = v;
                }
            }
            std::sort(step.removed_vertices.begin(), step.removed_vertices.end());
            trace.steps.push_back(std::move(step));
        }
    }

    std::sort(forest_edges.begin(), forest_edges.end());
    trace.result = LFCover{LinearForest{t.n(), std::move(forest_edges)}, cover_s};

    auto check = verify_lf_cover(t, trace.result.forest, trace.result.s);
    if (!check.ok)
        throw theorem_violation("tree cover construction failed validation: " + check.diagnostic);
    return trace;
}

std::string format_trace(const TreeCoverTrace& trace) {
    std::ostringstream out;
    int i = 0;
    for (const auto& st : trace.steps) {
        out << "step " << ++i << ": ";
        if (st.case_no == 0) {
            out << "path component absorbed, vertices";
        } else {
            out << "case " << st.case_no << ", branch point " << st.branch_point << ", leaves";
            for (int l : st.leaves_used) out << " " << l;
            out << ", removed";
        }
        for (int v : st.removed_vertices) out << " " << v;
        out << "\n";
    }
    return out.str();
}

Graph prufer_decode(int n, const std::vector<int>& seq) {
    if (n < 2) throw input_error("prufer_decode needs n >= 2");
    if (static_cast<int>(seq.size()) != n - 2) throw input_error("bad Prüfer length");
    std::vector<int> count(n + 1, 0);
    for (int v : seq) {
        if (v < 1 || v > n) throw input_error("Prüfer entry out of range");
        ++count[v];
    }
    std::vector<Edge> edges;
    std::vector<bool> used(n + 1, false);
    for (int v : seq) {
        int leaf = 0;
        for (int u = 1; u <= n; ++u)
            if (!used[u] && count[u] == 0) { leaf = u; break; }
        used[leaf] = true;
        edges.push_back({std::min(leaf, v), std::max(leaf, v)});
        --count[v];
    }
    std::vector<int> rest;
    for (int u = 1; u <= n; ++u)
        if (!used[u] && count[u] == 0) rest.push_back(u);
    edges.push_back({rest[0], rest[1]});
    return Graph(n, std::move(edges));
}

std::vector<Graph> enumerate_trees_prufer(int n) {
    if (n > 9) throw size_error("Prüfer enumeration capped at n <= 9");
    if (n == 1) return {Graph(1, {})};
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> seq(n - 2, 1);
    for (;;) {
        Graph g = prufer_decode(n, seq);
        if (seen.insert(canon_key(g)).second) out.push_back(std::move(g));
        int k = n - 3;
        while (k >= 0 && seq[k] == n) seq[k--] = 1;
        if (k < 0) break;
        ++seq[k];
    }
    return out;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw input_error("enumerate_trees needs n >= 1");
    std::vector<Graph> level = {Graph(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        // dedup on the canonical tree relabeling, which has no edge-mask
        // size limit (canon_key caps out at 11 vertices)
        std::unordered_set<std::string> seen;
        for (const auto& g : level)
            for (int v = 1; v < k; ++v) {
                std::vector<Edge> e = g.edges();
                e.push_back({v, k});
                Graph h(k, std::move(e));
                if (seen.insert(to_graph6(canon_relabel(h))).second)
                    next.push_back(std::move(h));
            }
        level = std::move(next);
    }
    return level;
}

} // namespace konig
