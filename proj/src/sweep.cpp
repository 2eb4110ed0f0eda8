#include "konig/sweep.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "konig/classes.hpp"
#include "konig/cutset.hpp"
#include "konig/lf_cover.hpp"
#include "konig/linear_forest.hpp"
#include "konig/tree_cover.hpp"

namespace konig {

SweepCheck parse_sweep_check(const std::string& name) {
    if (name == "lf-coverable" || name == "lf_coverable") return SweepCheck::lf_coverable;
    if (name == "konig-equivalence" || name == "konig_equivalence")
        return SweepCheck::konig_equivalence;
    if (name == "tree-algorithm" || name == "tree_algorithm") return SweepCheck::tree_algorithm;
    throw input_error("unknown sweep check: " + name);
}

SweepRecord sweep_one(const Graph& g, SweepCheck check) {
    SweepRecord rec;
    rec.n = g.n();
    rec.edges = g.edge_count();
    try {
        rec.graph6 = to_graph6(canon_relabel(g));
        switch (check) {
            case SweepCheck::lf_coverable:
            case SweepCheck::konig_equivalence: {
                // is_konig cross-checks grade == lf against cover existence and
                // throws theorem_violation on disagreement, which aborts the
                // sweep by design
                KonigVerdict v = is_konig(g);
                rec.grade = v.grade;
                rec.lf = v.lf;
                rec.konig = v.konig;
                if (v.cover) rec.cover_s = v.cover->s;
                // a cover-less graph refutes universal coverability, but not
                // the grade/LF equivalence (that cross-check lives in is_konig)
                rec.counterexample =
                    check == SweepCheck::lf_coverable && !v.cover.has_value();
                break;
            }
            case SweepCheck::tree_algorithm: {
                if (!is_tree(g)) throw input_error("tree-algorithm check requires a tree");
                TreeCoverTrace trace = tree_lf_cover(g);
                rec.grade = grade(g);
                rec.lf = lf_number(g);
                rec.konig = rec.grade == rec.lf;
                rec.cover_s = trace.result.s;
                if (static_cast<int>(trace.result.forest.edges.size()) != rec.grade)
                    throw theorem_violation("tree cover forest size differs from grade");
                break;
            }
        }
    } catch (const theorem_violation&) {
        throw; // a disproved theorem must abort, never become a data row
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

std::vector<SweepRecord> sweep(const std::vector<Graph>& graphs, SweepCheck check, int jobs) {
    std::vector<SweepRecord> out(graphs.size());
    if (jobs <= 1 || graphs.size() < 2) {
        for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = sweep_one(graphs[i], check);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> violated{false};
    std::string violation_msg;
    std::mutex msg_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size() || violated.load()) return;
            try {
                out[i] = sweep_one(graphs[i], check);
            } catch (const theorem_violation& e) {
                std::lock_guard<std::mutex> lk(msg_mutex);
                violated = true;
                violation_msg = e.what();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int workers = std::min<int>(jobs, static_cast<int>(graphs.size()));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (violated) throw theorem_violation(violation_msg);
    return out;
}

std::vector<Graph> enumerate_class(const std::string& cls, int max_n) {
    if (max_n < 1) throw input_error("enumerate_class requires max_n >= 1");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Graph> level;
        if (cls == "all") level = enumerate_graphs(n);
        else if (cls == "connected") level = enumerate_graphs(n, true);
        else if (cls == "tree") level = enumerate_trees(n);
        else if (cls == "cograph") level = enumerate_cographs(n);
        else if (cls == "trivially-perfect") level = enumerate_trivially_perfect(n);
        else if (cls == "permutation") level = enumerate_permutation_graphs(n);
        else if (cls == "interval") level = enumerate_interval_graphs(n);
        else if (cls == "bipartite") level = enumerate_bipartite_graphs(n);
        else throw input_error("unknown graph class: " + cls);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

namespace {

std::string cover_s_field(const SweepRecord& r) {
    if (!r.cover_s) return "NONE";
    std::string out;
    for (int v : set_to_vertices(*r.cover_s)) {
        if (!out.empty()) out += ";";
        out += std::to_string(v);
    }
    return out; // empty string = cover with S = {}
}

} // namespace

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::string out = "graph6,n,edges,grade,lf,konig,cover_s\n";
    for (const auto& r : records) {
        out += r.graph6 + "," + std::to_string(r.n) + "," + std::to_string(r.edges) + ",";
        if (r.failed()) {
            std::string msg = r.error;
            for (char& c : msg)
                if (c == ',' || c == '\n') c = ';';
            out += ",,,ERROR: " + msg + "\n";
        } else {
            out += std::to_string(r.grade) + "," + std::to_string(r.lf) + "," +
                   (r.konig ? "true" : "false") + "," + cover_s_field(r) + "\n";
        }
    }
    return out;
}

std::string sweep_json(const std::vector<SweepRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json row;
        row["graph6"] = r.graph6;
        row["n"] = r.n;
        row["edges"] = r.edges;
        if (r.failed()) {
            row["error"] = r.error;
        } else {
            row["grade"] = r.grade;
            row["lf"] = r.lf;
            row["konig"] = r.konig;
            if (r.cover_s) row["cover_s"] = set_to_vertices(*r.cover_s);
            else row["cover_s"] = nullptr;
            row["counterexample"] = r.counterexample;
        }
        arr.push_back(std::move(row));
    }
    return arr.dump(2);
}

int count_counterexamples(const std::vector<SweepRecord>& records) {
    int c = 0;
    for (const auto& r : records) c += r.counterexample ? 1 : 0;
    return c;
}

} // namespace konig
