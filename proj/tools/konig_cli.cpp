// Command-line surface: single-graph reports, cover search and verification,
// the tree construction, class sweeps, ideal verification suites, and raw
// ideal operations.
//
// Exit codes: 0 success, 1 mathematical-claim failure, 2 input error,
// 3 resource/size error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "konig/bei.hpp"
#include "konig/classes.hpp"
#include "konig/cutset.hpp"
#include "konig/errors.hpp"
#include "konig/graph.hpp"
#include "konig/groebner.hpp"
#include "konig/lf_cover.hpp"
#include "konig/linear_forest.hpp"
#include "konig/sweep.hpp"
#include "konig/tree_cover.hpp"

namespace {

using namespace konig;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

// Cover file format: `f <i> <j>` lines for forest edges and at most one
// `s <v1> <v2> ...` line; `#` starts a comment.
struct CoverFile {
    std::vector<Edge> forest;
    VertexSet s = 0;
};

CoverFile parse_cover_file(const std::string& text) {
    CoverFile out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_s = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "f") {
            int i = 0, j = 0;
            if (!(ls >> i >> j) || i < 1 || j < 1 || i == j)
                throw input_error("cover file line " + std::to_string(lineno) +
                                  ": expected 'f <i> <j>'");
            out.forest.push_back({std::min(i, j), std::max(i, j)});
        } else if (tag == "s") {
            if (saw_s)
                throw input_error("cover file line " + std::to_string(lineno) +
                                  ": duplicate 's' line");
            saw_s = true;
            int v;
            while (ls >> v) {
                if (v < 1 || v > 64)
                    throw input_error("cover file line " + std::to_string(lineno) +
                                      ": vertex out of range");
                out.s |= vbit(v);
            }
        } else {
            throw input_error("cover file line " + std::to_string(lineno) + ": unknown tag '" +
                              tag + "'");
        }
    }
    return out;
}

std::string vertex_list(VertexSet s) {
    if (!s) return "{}";
    std::string out = "{";
    bool first = true;
    for (int v : set_to_vertices(s)) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

std::string edge_list(const std::vector<Edge>& edges) {
    std::string out;
    for (const auto& [i, j] : edges) {
        if (!out.empty()) out += " ";
        out += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
    return out.empty() ? "(none)" : out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

int cmd_info(const std::string& graph_file) {
    Graph g = load_graph(graph_file);
    CutSetReport cs = cut_sets(g);
    KonigVerdict v = is_konig(g);
    std::cout << "n: " << g.n() << "\n";
    std::cout << "edges: " << g.edge_count() << "\n";
    std::cout << "components: " << component_count(g) << "\n";
    std::cout << "cut sets: " << cs.sets.size() << "\n";
    std::cout << "grade: " << v.grade << "\n";
    std::cout << "LF: " << v.lf << "\n";
    std::cout << "Konig type: " << (v.konig ? "yes" : "no") << "\n";
    if (v.cover) {
        std::cout << "cover forest: " << edge_list(v.cover->forest.edges) << "\n";
        std::cout << "cover S: " << vertex_list(v.cover->s) << "\n";
    } else {
        std::cout << "cover: NONE\n";
    }
    return 0;
}

int cmd_cover_find(const std::string& graph_file) {
    Graph g = load_graph(graph_file);
    auto cover = find_lf_cover(g);
    if (!cover) {
        std::cout << "no LF-cover exists\n";
        return 1;
    }
    std::cout << "forest: " << edge_list(cover->forest.edges) << "\n";
    std::cout << "S: " << vertex_list(cover->s) << "\n";
    return 0;
}

int cmd_cover_verify(const std::string& graph_file, const std::string& cover_file) {
    Graph g = load_graph(graph_file);
    CoverFile cf = parse_cover_file(slurp(cover_file));
    CoverCheck check = verify_lf_cover(g, LinearForest{g.n(), cf.forest}, cf.s);
    if (check.ok) {
        std::cout << "valid LF-cover\n";
        return 0;
    }
    std::cout << "invalid: " << check.diagnostic << "\n";
    return 1;
}

int cmd_tree(const std::string& graph_file, bool trace) {
    Graph g = load_graph(graph_file);
    if (!is_tree(g)) throw input_error("tree command requires a tree");
    TreeCoverTrace t = tree_lf_cover(g);
    if (trace) std::cout << format_trace(t);
    std::cout << "forest (" << t.result.forest.edges.size()
              << " edges): " << edge_list(t.result.forest.edges) << "\n";
    std::cout << "S: " << vertex_list(t.result.s) << "\n";
    return 0;
}

int cmd_sweep(const std::string& cls, int max_n, const std::string& graph6_file,
              const std::string& check_name, const std::string& out_csv,
              const std::string& out_json, int jobs) {
    std::vector<Graph> graphs;
    if (!graph6_file.empty()) {
        std::istringstream in(slurp(graph6_file));
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) graphs.push_back(parse_graph6(line));
        }
    } else if (!cls.empty()) {
        graphs = enumerate_class(cls, max_n);
    } else {
        throw input_error("sweep requires --class or --graph6");
    }
    SweepCheck check = parse_sweep_check(check_name);
    auto records = sweep(graphs, check, jobs);
    std::string csv = sweep_csv(records);
    if (!out_csv.empty()) write_file(out_csv, csv);
    else std::cout << csv;
    if (!out_json.empty()) write_file(out_json, sweep_json(records));
    int errors = 0;
    for (const auto& r : records) errors += r.failed() ? 1 : 0;
    int cx = count_counterexamples(records);
    std::cout << "swept " << records.size() << " graphs, " << cx << " counterexample(s), "
              << errors << " error row(s)\n";
    return cx > 0 ? 1 : 0;
}

void print_checks(const std::vector<CheckResult>& checks, bool& all) {
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name
                  << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        all = all && c.pass;
    }
}

int cmd_verify(const std::string& suite, int n, int p, bool json) {
    bool all = true;
    std::vector<CheckResult> checks;
    if (suite == "pd") {
        if (n < 2) throw input_error("pd suite requires --n >= 2");
        for (const Graph& g : enumerate_graphs(n, /*connected_only=*/true)) {
            bool ok = check_primary_decomposition(g, p);
            checks.push_back({"primary-decomposition " + to_graph6(canon_relabel(g)), ok,
                              ok ? "" : "J(G) differs from the intersection of the P_S(G)"});
        }
    } else if (suite == "colon") {
        std::vector<std::pair<std::string, Graph>> cases = {
            {"C_" + std::to_string(n), cycle_graph(n)},
            {"K_" + std::to_string(n), complete_graph(n)}};
        for (const auto& [tag, g] : cases) {
            ColonReport rep = verify_colon_theorem(g, p);
            for (auto& c : rep.checks)
                checks.push_back({tag + " " + c.name, c.pass, c.detail});
        }
    } else if (suite == "zprop") {
        bool ok = zprop_check(n, p);
        checks.push_back({"z-membership n=" + std::to_string(n), ok, ""});
    } else if (suite == "grading") {
        bool ok = grading_prop_check(n, p);
        checks.push_back({"grading-membership n=" + std::to_string(n), ok, ""});
    } else if (suite == "root-ass") {
        RootAssReport rep = verify_root_ass(n, p);
        checks = rep.checks;
    } else if (suite == "regseq") {
        // path: a genuine regular sequence
        std::vector<Edge> path_edges;
        for (int i = 1; i < n; ++i) path_edges.push_back({i, i + 1});
        auto pr = regular_sequence_check(path_edges, path_graph(n), p);
        checks.push_back({"path-regular n=" + std::to_string(n), pr.regular,
                          pr.regular ? "" : "failed at index " + std::to_string(pr.failing_index)});
        // triangle: must fail at the third edge
        auto tr = regular_sequence_check({{1, 2}, {2, 3}, {1, 3}}, complete_graph(3), p);
        checks.push_back({"triangle-fails-at-3", !tr.regular && tr.failing_index == 3, ""});
        // claw: must fail at the third edge, where the obstruction is
        // ((d_{1,2}, d_{1,3}) : d_{1,4}) = J(K_3 on {1,2,3})
        Graph claw(4, {{1, 2}, {1, 3}, {1, 4}});
        auto cr = regular_sequence_check({{1, 2}, {1, 3}, {1, 4}}, claw, p);
        checks.push_back({"claw-fails-at-3", !cr.regular && cr.failing_index == 3, ""});
        Ring r = make_ring(4, p);
        Ideal colon =
            ideal_colon(r, make_ideal({delta(r, 1, 2), delta(r, 1, 3)}), delta(r, 1, 4));
        Ideal k3 = make_ideal({delta(r, 1, 2), delta(r, 1, 3), delta(r, 2, 3)});
        bool eq = ideal_equal(r, colon, k3);
        checks.push_back({"claw-colon-equals-JK3", eq, ""});
    } else {
        throw input_error("unknown suite: " + suite +
                          " (expected pd, colon, zprop, grading, root-ass, regseq)");
    }
    print_checks(checks, all);
    if (json) std::cout << report_to_json(suite, checks) << "\n";
    std::cout << "suite " << suite << ": " << (all ? "PASS" : "FAIL") << "\n";
    return all ? 0 : 1;
}

Order parse_order(const std::string& name) {
    if (name == "degrevlex") return Order::degrevlex;
    if (name == "lex") return Order::lex;
    throw input_error("unknown order: " + name + " (expected degrevlex or lex)");
}

int cmd_ideal(const std::string& op, const std::string& file_a, const std::string& file_b,
              const std::string& poly_text, const std::string& order_name) {
    Order ord = parse_order(order_name);
    IdealFile a = parse_ideal_file(slurp(file_a), ord);
    const Ring& r = a.ring;
    auto load_b = [&]() {
        IdealFile b = parse_ideal_file(slurp(file_b), ord);
        if (b.ring.n != r.n || b.ring.p != r.p)
            throw input_error("ideal files use different rings");
        return b;
    };
    if (op == "gb") {
        std::cout << format_ideal_file(r, groebner(r, a.gens));
        return 0;
    }
    if (op == "member") {
        if (poly_text.empty()) throw input_error("ideal member requires --poly");
        bool in = ideal_member(r, parse_poly(r, poly_text), make_ideal(a.gens));
        std::cout << (in ? "true" : "false") << "\n";
        return 0;
    }
    if (op == "colon") {
        Ideal result;
        if (!poly_text.empty())
            result = ideal_colon(r, make_ideal(a.gens), parse_poly(r, poly_text));
        else if (!file_b.empty())
            result = ideal_colon_ideal(r, make_ideal(a.gens), make_ideal(load_b().gens));
        else
            throw input_error("ideal colon requires --poly or a second ideal file");
        std::cout << format_ideal_file(r, groebner(r, result.gens));
        return 0;
    }
    if (op == "equal") {
        if (file_b.empty()) throw input_error("ideal equal requires two ideal files");
        bool eq = ideal_equal(r, make_ideal(a.gens), make_ideal(load_b().gens));
        std::cout << (eq ? "true" : "false") << "\n";
        return 0;
    }
    if (op == "intersect") {
        if (file_b.empty()) throw input_error("ideal intersect requires two ideal files");
        Ideal result = ideal_intersect(r, make_ideal(a.gens), make_ideal(load_b().gens));
        std::cout << format_ideal_file(r, groebner(r, result.gens));
        return 0;
    }
    throw input_error("unknown ideal operation: " + op);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Koenig-type binomial edge ideals: combinatorial and ideal-theoretic checks"};
    app.require_subcommand(1);

    std::string graph_file, cover_file;
    bool trace = false;

    auto* info = app.add_subcommand("info", "Single-graph report: grade, LF, Koenig verdict");
    info->add_option("graph", graph_file, "edge-list graph file")->required();

    auto* cover = app.add_subcommand("cover", "Find or verify an LF-cover");
    auto* cover_find = cover->add_subcommand("find", "search for an LF-cover");
    cover_find->add_option("graph", graph_file, "edge-list graph file")->required();
    auto* cover_verify = cover->add_subcommand("verify", "verify a candidate LF-cover");
    cover_verify->add_option("graph", graph_file, "edge-list graph file")->required();
    cover_verify->add_option("cover", cover_file, "cover file (f/s lines)")->required();
    cover->require_subcommand(1);

    auto* tree = app.add_subcommand("tree", "Constructive LF-cover for a tree");
    tree->add_option("graph", graph_file, "edge-list graph file")->required();
    tree->add_flag("--trace", trace, "print one line per construction step");

    std::string cls, graph6_file, check_name = "lf-coverable", out_csv, out_json;
    int max_n = 6, jobs = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Batch checks over a class or graph6 stream");
    sweep_cmd->add_option("--class", cls,
                          "all|connected|tree|cograph|trivially-perfect|permutation|interval|"
                          "bipartite");
    sweep_cmd->add_option("--max-n", max_n, "largest vertex count (default 6)");
    sweep_cmd->add_option("--graph6", graph6_file, "file of graph6 lines instead of a class");
    sweep_cmd->add_option("--check", check_name,
                          "lf-coverable|konig-equivalence|tree-algorithm (default lf-coverable)");
    sweep_cmd->add_option("--out", out_csv, "write CSV here instead of stdout");
    sweep_cmd->add_option("--json", out_json, "also write a JSON mirror here");
    sweep_cmd->add_option("--jobs", jobs, "worker threads (default 1)");

    std::string suite;
    int vn = 4, vp = 2;
    bool vjson = false;
    auto* verify = app.add_subcommand("verify", "Ideal-theoretic verification suites");
    verify->add_option("--suite", suite, "pd|colon|zprop|grading|root-ass|regseq")->required();
    verify->add_option("--n", vn, "vertex count (default 4)");
    verify->add_option("--char", vp, "prime characteristic (default 2)");
    verify->add_flag("--json", vjson, "also print a JSON report");

    std::string ideal_op, ideal_a, ideal_b, poly_text, order_name = "degrevlex";
    auto* ideal = app.add_subcommand("ideal", "Groebner-basis operations on ideal files");
    ideal->add_option("op", ideal_op, "gb|member|colon|equal|intersect")->required();
    ideal->add_option("file", ideal_a, "ideal file")->required();
    ideal->add_option("file2", ideal_b, "second ideal file (colon/equal/intersect)");
    ideal->add_option("--poly", poly_text, "polynomial text (member/colon)");
    ideal->add_option("--order", order_name, "degrevlex|lex (default degrevlex)");

    try {
        app.parse(argc, argv);
        if (info->parsed()) return cmd_info(graph_file);
        if (cover->parsed()) {
            if (cover_find->parsed()) return cmd_cover_find(graph_file);
            return cmd_cover_verify(graph_file, cover_file);
        }
        if (tree->parsed()) return cmd_tree(graph_file, trace);
        if (sweep_cmd->parsed())
            return cmd_sweep(cls, max_n, graph6_file, check_name, out_csv, out_json, jobs);
        if (verify->parsed()) return cmd_verify(suite, vn, vp, vjson);
        if (ideal->parsed()) return cmd_ideal(ideal_op, ideal_a, ideal_b, poly_text, order_name);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const konig::theorem_violation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 1;
    } catch (const konig::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const konig::size_error& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
