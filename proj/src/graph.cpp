#include "konig/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace konig {

std::vector<int> set_to_vertices(VertexSet s) {
    std::vector<int> out;
    for (int v = 1; s; ++v, s >>= 1)
        if (s & 1) out.push_back(v);
    return out;
}

VertexSet vertices_to_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= vbit(v);
    return s;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > 64) throw input_error("vertex count out of range: " + std::to_string(n));
    for (auto& [i, j] : edges_) {
        if (i > j) std::swap(i, j);
        if (i == j) throw input_error("self-loop at vertex " + std::to_string(i));
        if (i < 1 || j > n_) throw input_error("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw input_error("duplicate edge");
    adj_.assign(n_, 0);
    for (auto [i, j] : edges_) {
        adj_[i - 1] |= vbit(j);
        adj_[j - 1] |= vbit(i);
    }
}

bool Graph::has_edge(int i, int j) const {
    if (i == j || i < 1 || j < 1 || i > n_ || j > n_) return false;
    return vin(adj_[i - 1], j);
}

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

VertexSet Graph::vertex_mask() const {
    return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, lineno = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        auto fail = [&](const std::string& msg) -> input_error {
            return input_error("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tag == "n") {
            if (n >= 0) throw fail("duplicate header");
            if (!(ls >> n) || n < 0) throw fail("bad vertex count");
        } else if (tag == "e") {
            if (n < 0) throw fail("edge before header");
            int i, j;
            if (!(ls >> i >> j)) throw fail("malformed edge line");
            if (i == j) throw fail("self-loop");
            if (i < 1 || j < 1 || i > n || j > n) throw fail("endpoint out of range");
            Edge e{std::min(i, j), std::max(i, j)};
            if (std::find(edges.begin(), edges.end(), e) != edges.end())
                throw fail("duplicate edge");
            edges.push_back(e);
        } else {
            throw fail("unknown directive '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest) throw fail("trailing tokens");
    }
    if (n < 0) throw input_error("missing `n <count>` header");
    return Graph(n, std::move(edges));
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (auto [i, j] : g.edges()) out << "e " << i << " " << j << "\n";
    return out.str();
}

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw input_error("empty graph6 line");
    std::size_t pos = 0;
    auto byte = [&](std::size_t k) -> int {
        int c = static_cast<unsigned char>(line[k]);
        if (c < 63 || c > 126) throw input_error("bad graph6 byte");
        return c - 63;
    };
    int n;
    if (line[0] != '~') {
        n = byte(0);
        pos = 1;
    } else {
        if (line.size() < 4 || line[1] == '~') throw input_error("graph6 n too large");
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }
    if (n > 64) throw input_error("graph6 graph too large for this tool");
    std::vector<Edge> edges;
    int bit = 0;
    std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (line.size() - pos < need) throw input_error("truncated graph6 line");
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) edges.push_back({i, j});
        }
    return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    int n = g.n();
    if (n > 62) throw size_error("graph6 output limited to n <= 62 here");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int nbits = n * (n - 1) / 2;
    std::vector<int> bits(nbits, 0);
    int bit = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) bits[bit] = 1;
    for (int k = 0; k < nbits; k += 6) {
        int b = 0;
        for (int t = 0; t < 6; ++t)
            b = (b << 1) | (k + t < nbits ? bits[k + t] : 0);
        out.push_back(static_cast<char>(b + 63));
    }
    return out;
}

std::vector<VertexSet> component_masks(const Graph& g, VertexSet removed) {
    std::vector<VertexSet> comps;
    VertexSet todo = g.vertex_mask() & ~removed;
    while (todo) {
        VertexSet comp = todo & -todo; // lowest remaining vertex
        for (;;) {
            VertexSet grown = comp;
            VertexSet scan = comp;
            while (scan) {
                int v = std::countr_zero(scan) + 1;
                scan &= scan - 1;
                grown |= g.adj(v) & ~removed;
            }
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        todo &= ~comp;
    }
    return comps;
}

std::vector<std::vector<int>> connected_components(const Graph& g, VertexSet removed) {
    std::vector<std::vector<int>> out;
    for (VertexSet m : component_masks(g, removed)) out.push_back(set_to_vertices(m));
    return out;
}

int component_count(const Graph& g, VertexSet removed) {
    return static_cast<int>(component_masks(g, removed).size());
}

bool is_connected(const Graph& g) { return g.n() <= 1 || component_count(g) == 1; }

bool is_tree(const Graph& g) {
    return g.n() >= 1 && g.edge_count() == g.n() - 1 && is_connected(g);
}

namespace {

// Pair index of edge (i,j), i<j, in the order (1,2),(1,3),...,(n-1,n).
int pair_index(int i, int j, int n) {
    return (i - 1) * n - i * (i + 1) / 2 + j - 1;
}

std::uint64_t mask_under(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t m = 0;
    int n = g.n();
    for (auto [i, j] : g.edges()) {
        int a = perm[i - 1], b = perm[j - 1];
        if (a > b) std::swap(a, b);
        m |= std::uint64_t{1} << pair_index(a, b, n);
    }
    return m;
}

// Iterated neighborhood refinement: vertices get dense color ids that are
// invariant under relabeling. Returns final colors (smaller id = earlier
// class in the canonical vertex order).
std::vector<int> refine_colors(const Graph& g) {
    int n = g.n();
    std::vector<int> color(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> keys(n);
        for (int v = 1; v <= n; ++v) {
            std::vector<int> key;
            key.push_back(color[v - 1]);
            std::vector<int> nb;
            std::uint64_t a = g.adj(v);
            while (a) {
                int w = std::countr_zero(a) + 1;
                a &= a - 1;
                nb.push_back(color[w - 1]);
            }
            std::sort(nb.begin(), nb.end());
            key.insert(key.end(), nb.begin(), nb.end());
            keys[v - 1] = {std::move(key), v - 1};
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int id = -1;
        const std::vector<int>* prev = nullptr;
        for (auto& [key, v] : sorted) {
            if (!prev || key != *prev) ++id;
            prev = &key;
            next[v] = id;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

// Minimal edge mask over all orderings that list refinement classes in color
// order and permute freely within each class.
std::uint64_t canon_min_mask(const Graph& g, std::vector<int>* best_perm_out) {
    int n = g.n();
    if (n > 11) throw size_error("canonical edge mask capped at n <= 11");
    if (n == 0) {
        if (best_perm_out) best_perm_out->clear();
        return 0;
    }
    std::vector<int> color = refine_colors(g);
    // vertices sorted by (color, label); positions are assigned in this order
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    std::stable_sort(verts.begin(), verts.end(),
                     [&](int a, int b) { return color[a - 1] < color[b - 1]; });
    // class boundaries
    std::vector<std::pair<int, int>> classes; // [begin, end) into verts
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && color[verts[j] - 1] == color[verts[i] - 1]) ++j;
        classes.push_back({i, j});
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> perm(n); // vertex -> new label
    std::vector<int> arrangement = verts;
    // odometer over per-class permutations
    std::vector<std::vector<int>> cls;
    for (auto [b, e] : classes) cls.emplace_back(arrangement.begin() + b, arrangement.begin() + e);
    std::vector<int> best_perm;
    std::vector<std::size_t> idx(cls.size(), 0);
    for (;;) {
        int pos = 0;
        for (auto& c : cls)
            for (int v : c) perm[v - 1] = ++pos;
        std::uint64_t m = mask_under(g, perm);
        if (m < best) {
            best = m;
            best_perm = perm;
        }
        // advance: next_permutation on the last class that still has one
        std::size_t k = cls.size();
        while (k > 0 && !std::next_permutation(cls[k - 1].begin(), cls[k - 1].end())) --k;
        if (k == 0) break;
    }
    if (best_perm_out) *best_perm_out = best_perm;
    return best;
}

// Rooted-code (AHU) canonicalization for trees: exact for any vertex count.
// code(v) = "(" + concatenation of children's codes in sorted order + ")".
std::string tree_code(const Graph& g, int v, int parent) {
    std::vector<std::string> kids;
    std::uint64_t a = g.adj(v);
    while (a) {
        int w = std::countr_zero(a) + 1;
        a &= a - 1;
        if (w != parent) kids.push_back(tree_code(g, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
}

// Preorder labeling that visits children in sorted-code order. Children with
// equal codes root isomorphic subtrees, so the relabeled result is the same
// whichever is taken first.
void tree_assign(const Graph& g, int v, int parent, int& next, std::vector<int>& perm) {
    perm[v - 1] = next++;
    std::vector<std::pair<std::string, int>> kids;
    std::uint64_t a = g.adj(v);
    while (a) {
        int w = std::countr_zero(a) + 1;
        a &= a - 1;
        if (w != parent) kids.push_back({tree_code(g, w, v), w});
    }
    std::sort(kids.begin(), kids.end());
    for (auto& [code, w] : kids) tree_assign(g, w, v, next, perm);
}

// The 1- or 2-element centre of a tree, by repeated leaf stripping.
std::vector<int> tree_centers(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n + 1);
    std::vector<int> frontier;
    int remaining = n;
    for (int v = 1; v <= n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) frontier.push_back(v);
    }
    std::vector<bool> gone(n + 1, false);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            gone[v] = true;
            --remaining;
            std::uint64_t a = g.adj(v);
            while (a) {
                int w = std::countr_zero(a) + 1;
                a &= a - 1;
                if (!gone[w] && --deg[w] == 1) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (!gone[v]) out.push_back(v);
    return out;
}

Graph tree_canon_relabel(const Graph& g) {
    auto centers = tree_centers(g);
    int root = centers[0];
    if (centers.size() == 2 &&
        tree_code(g, centers[1], 0) < tree_code(g, centers[0], 0))
        root = centers[1];
    std::vector<int> perm(g.n());
    int next = 1;
    tree_assign(g, root, 0, next, perm);
    return relabel(g, perm);
}

} // namespace

std::uint64_t canonical_form(const Graph& g) {
    int n = g.n();
    if (n > 10) throw size_error("canonical_form capped at n <= 10");
    if (n == 0) return 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, mask_under(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::uint64_t canon_key(const Graph& g) { return canon_min_mask(g, nullptr); }

Graph canon_relabel(const Graph& g) {
    // trees take the linear-time rooted-code route, which also covers vertex
    // counts beyond the edge-mask capacity of canon_key
    if (g.n() >= 1 && is_tree(g)) return tree_canon_relabel(g);
    std::vector<int> perm;
    canon_min_mask(g, &perm);
    return relabel(g, perm);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (auto [i, j] : g.edges()) {
        int a = perm[i - 1], b = perm[j - 1];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(g.n(), std::move(edges));
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n > 7) throw size_error("enumerate_graphs capped at n <= 7; use graph6 ingestion");
    if (n < 0) throw input_error("negative vertex count");
    if (n == 0) return {Graph()};
    // Grow vertex by vertex: every graph on k vertices arises from one on k-1
    // by attaching vertex k to some neighborhood. Dedup per level.
    std::vector<Graph> level = {Graph(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const auto& g : level) {
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
                std::vector<Edge> edges = g.edges();
                for (int v = 1; v < k; ++v)
                    if ((nb >> (v - 1)) & 1) edges.push_back({v, k});
                Graph h(k, std::move(edges));
                if (seen.insert(canon_key(h)).second) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    if (connected_only) {
        std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
    }
    return level;
}

Graph path_graph(int m) {
    if (m < 1) throw input_error("path_graph needs m >= 1");
    std::vector<Edge> e;
    for (int i = 1; i < m; ++i) e.push_back({i, i + 1});
    return Graph(m, std::move(e));
}

Graph cycle_graph(int m) {
    if (m < 3) throw input_error("cycle_graph needs m >= 3");
    std::vector<Edge> e;
    for (int i = 1; i < m; ++i) e.push_back({i, i + 1});
    e.push_back({1, m});
    return Graph(m, std::move(e));
}

Graph complete_graph(int m) {
    if (m < 0) throw input_error("complete_graph needs m >= 0");
    std::vector<Edge> e;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) e.push_back({i, j});
    return Graph(m, std::move(e));
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw input_error("complete_bipartite_graph needs a,b >= 1");
    std::vector<Edge> e;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) e.push_back({i, j});
    return Graph(a + b, std::move(e));
}

Graph net_graph() {
    return Graph(6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}});
}

Graph standard_graph(const std::string& kind, const std::vector<int>& params) {
    auto arity = [&](std::size_t k) {
        if (params.size() != k)
            throw input_error("standard_graph '" + kind + "' expects " + std::to_string(k) +
                              " parameter(s)");
    };
    if (kind == "path") { arity(1); return path_graph(params[0]); }
    if (kind == "cycle") { arity(1); return cycle_graph(params[0]); }
    if (kind == "complete") { arity(1); return complete_graph(params[0]); }
    if (kind == "complete_bipartite") { arity(2); return complete_bipartite_graph(params[0], params[1]); }
    if (kind == "net") { arity(0); return net_graph(); }
    throw input_error("unknown standard graph kind '" + kind + "'");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (auto [i, j] : b.edges()) e.push_back({i + a.n(), j + a.n()});
    return Graph(a.n() + b.n(), std::move(e));
}

} // namespace konig
