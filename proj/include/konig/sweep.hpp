#pragma once

// Batch evaluation of graphs against the coverability / Koenig-type checks,
// with deterministic CSV and JSON serialization.

#include <optional>
#include <string>
#include <vector>

#include "konig/graph.hpp"

namespace konig {

enum class SweepCheck { lf_coverable, konig_equivalence, tree_algorithm };
SweepCheck parse_sweep_check(const std::string& name);

struct SweepRecord {
    std::string graph6; // canonical representative
    int n = 0;
    int edges = 0;
    int grade = 0;
    int lf = 0;
    bool konig = false;
    std::optional<VertexSet> cover_s; // nullopt = NONE (no cover)
    std::string error;                // per-graph failure, recorded not fatal
    bool failed() const { return !error.empty(); }
    // a counterexample to the conjecture under test (not an execution error)
    bool counterexample = false;
};

SweepRecord sweep_one(const Graph& g, SweepCheck check);

// jobs > 1 runs graphs concurrently; output is merged in input order, so the
// result is byte-identical at every parallelism level.
std::vector<SweepRecord> sweep(const std::vector<Graph>& graphs, SweepCheck check, int jobs = 1);

// named class -> graphs on exactly max_n or fewer vertices (class dependent)
std::vector<Graph> enumerate_class(const std::string& cls, int max_n);

std::string sweep_csv(const std::vector<SweepRecord>& records);
std::string sweep_json(const std::vector<SweepRecord>& records);
int count_counterexamples(const std::vector<SweepRecord>& records);

} // namespace konig
