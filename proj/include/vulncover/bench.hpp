#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vulncover/graph.hpp"
#include "vulncover/solvers.hpp"

namespace vulncover {

// Grid for the solver-comparison protocol: random bipartite graphs over a
// size/edge-probability grid, a fixed number of trials per cell, every
// solver backend on each instance.
struct BenchConfig {
    int min_vulns = 8;
    int max_vulns = 24;
    // hosts per cell = max(1, round(host_factor * n_vulns))
    double host_factor = 1.0;
    std::vector<double> edge_probs = {0.5, 0.3334, 0.1};
    int trials = 3;
    std::uint64_t seed = 0;
    AnnealParams anneal;  // anneal.seed is ignored; per-cell seeds derive from `seed`
    double penalty = 2.0;
    std::optional<std::chrono::microseconds> exact_time_budget =
        std::chrono::microseconds{60'000'000};
};

// One (n, p, trial) cell. Timing covers the solve call only, not encoding.
struct BenchmarkRecord {
    int n_vulns = 0;
    double edge_prob = 0.0;
    int trial = 0;
    std::uint64_t seed = 0;  // seed used for graph generation

    bool exact_timed_out = false;
    int exact_size = -1;  // -1 when the exact solve timed out
    int best_sample_size = 0;
    int size_diff = 0;  // best_sample_size - exact_size, meaningless on timeout
    long long exact_time_us = 0;
    long long sample_time_us = 0;
    int invalid_count = 0;  // reads whose final state decodes to a non-cover
    int greedy_size = 0;
};

// One (n, p) cell aggregated over trials.
struct SummaryRow {
    int n_vulns = 0;
    double edge_prob = 0.0;
    int trials = 0;
    int exact_completed = 0;  // trials whose exact solve finished in budget
    double mean_size_diff = 0.0;
    double mean_exact_time_us = 0.0;
    double mean_sample_time_us = 0.0;
    long long invalid_total = 0;
};

// Seeded bipartite generator: each of the n_vulns * n_hosts potential edges
// is included independently with probability p. Identical seeds give
// identical graphs. Throws InputError when p is outside [0, 1].
VulnerabilityGraph random_vuln_graph(int n_vulns, int n_hosts, double p, std::uint64_t seed);

// Runs the full grid in canonical (n, p, trial) order: generate graph,
// build dual, exact solve (timed, budgeted), annealing sample (timed),
// greedy baseline, invalid-sample accounting, and a kill-chain elimination
// check on every valid cover. Throws VerificationError if any valid cover
// fails that check. on_record, when set, is called after each cell.
std::vector<BenchmarkRecord> run_benchmark(
    const BenchConfig& cfg,
    const std::function<void(const BenchmarkRecord&)>& on_record = {});

// Per-(n, p) means over trials. Throws InputError on empty input.
std::vector<SummaryRow> summarize(const std::vector<BenchmarkRecord>& records);

// CSV with header n_vulns,edge_prob,trial,seed,exact_size,best_sample_size,
// size_diff,exact_time_us,sample_time_us,invalid_count,greedy_size.
// Timed-out cells leave exact_size and size_diff empty.
std::string records_to_csv(const std::vector<BenchmarkRecord>& records);

std::string summary_to_csv(const std::vector<SummaryRow>& rows);

// One whitespace-separated file per edge probability (x = n_vulns, then
// mean times, invalid totals and mean size diff), named plot_<prob>.dat
// under dir. Returns the file paths written.
std::vector<std::string> write_plot_data(const std::vector<SummaryRow>& rows,
                                         const std::string& dir);

}  // namespace vulncover
