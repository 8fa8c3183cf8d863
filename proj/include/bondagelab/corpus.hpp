#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bondagelab/plane_graph.hpp"

namespace bondagelab {

struct CorpusGraph {
    std::string id;  // "<index>:<generator>(<params>)"
    PlaneGraph graph;
};

/// Mixed-generator corpus of connected simple plane graphs with minimum
/// degree at least 3 and at most `max_n` vertices. Every choice is drawn from
/// one mt19937_64 seeded with `seed`, so the corpus is a pure function of the
/// three arguments.
std::vector<CorpusGraph> make_corpus(std::uint64_t seed, int count, int max_n);

struct RunLimits {
    int gamma_i_max_n = 64;
    int certify_max_n = 20;
    int jobs = 1;
};

struct GraphRecord {
    std::string id;
    int n = 0;
    int m = 0;
    int min_degree = 0;
    std::optional<int> gamma_i;
    std::string config = "none";
    std::string certificate = "skipped";
    std::string audit;
    bool config_found = false;
    bool certified = false;
    bool falsified = false;
    double wall_ms = 0;

    std::string line(bool timing) const;
};

struct RunReport {
    std::vector<GraphRecord> records;

    int falsifications() const;
    /// One `graph ...` line per record, then a `summary` block.
    std::string text(bool timing = false) const;
};

GraphRecord run_graph(const CorpusGraph& g, const RunLimits& limits);

/// Runs `run_graph` on every entry, up to `limits.jobs` graphs at a time.
/// Records come back in corpus order regardless of scheduling.
RunReport run_corpus(const std::vector<CorpusGraph>& corpus, const RunLimits& limits);

}  // namespace bondagelab
