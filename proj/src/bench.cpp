#include "vulncover/bench.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "vulncover/dual.hpp"
#include "vulncover/errors.hpp"
#include "vulncover/qubo.hpp"
#include "vulncover/rng.hpp"
#include "vulncover/verifier.hpp"

namespace vulncover {

namespace {

using Clock = std::chrono::steady_clock;

std::string label_for(char prefix, int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%c%03d", prefix, index + 1);
    return buf;
}

std::string format_prob(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return buf;
}

std::string format_mean(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

long long elapsed_us(Clock::time_point from) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - from).count();
}

void check_config(const BenchConfig& cfg) {
    if (cfg.min_vulns < 1 || cfg.max_vulns < cfg.min_vulns) {
        throw InputError("vulnerability count range must satisfy 1 <= min <= max");
    }
    if (cfg.trials < 1) throw InputError("trials must be >= 1");
    if (cfg.edge_probs.empty()) throw InputError("edge probability list must be non-empty");
    for (double p : cfg.edge_probs) {
        if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probabilities must lie in [0, 1]");
    }
    if (!(cfg.host_factor > 0.0)) throw InputError("host factor must be positive");
}

void require_killchain_free(const VulnerabilityGraph& g, const VertexCover& cover,
                            const char* producer) {
    const auto report = verify_remediation(g, cover);
    if (!report.killchain_free) {
        throw VerificationError(std::string("valid cover from ") + producer +
                                " left a kill chain in the residual graph");
    }
}

}  // namespace

VulnerabilityGraph random_vuln_graph(int n_vulns, int n_hosts, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
    if (n_vulns < 0 || n_hosts < 0) throw InputError("vertex counts must be non-negative");

    std::vector<std::string> vulns(n_vulns);
    std::vector<std::string> hosts(n_hosts);
    for (int i = 0; i < n_vulns; ++i) vulns[i] = label_for('v', i);
    for (int i = 0; i < n_hosts; ++i) hosts[i] = label_for('h', i);

    std::mt19937_64 gen(seed);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int vi = 0; vi < n_vulns; ++vi) {
        for (int hi = 0; hi < n_hosts; ++hi) {
            if (rng::canonical(gen) < p) edges.emplace_back(vulns[vi], hosts[hi]);
        }
    }
    return VulnerabilityGraph(std::move(hosts), std::move(vulns), edges);
}

std::vector<BenchmarkRecord> run_benchmark(
    const BenchConfig& cfg, const std::function<void(const BenchmarkRecord&)>& on_record) {
    check_config(cfg);

    std::vector<BenchmarkRecord> records;
    for (int n = cfg.min_vulns; n <= cfg.max_vulns; ++n) {
        const int hosts = std::max(1, static_cast<int>(std::lround(cfg.host_factor * n)));
        for (double p : cfg.edge_probs) {
            for (int trial = 0; trial < cfg.trials; ++trial) {
                // Per-cell seeds depend only on (master seed, n, p, trial),
                // never on execution order.
                const std::uint64_t cell =
                    rng::derive_seed(rng::derive_seed(rng::derive_seed(cfg.seed, n),
                                                      std::bit_cast<std::uint64_t>(p)),
                                     static_cast<std::uint64_t>(trial));
                const std::uint64_t graph_seed = rng::derive_seed(cell, 1);

                BenchmarkRecord rec;
                rec.n_vulns = n;
                rec.edge_prob = p;
                rec.trial = trial;
                rec.seed = graph_seed;

                const auto graph = random_vuln_graph(n, hosts, p, graph_seed);
                const auto dual = build_dual(graph);

                std::optional<VertexCover> exact;
                const auto exact_start = Clock::now();
                try {
                    exact = solve_exact(dual, cfg.exact_time_budget);
                    rec.exact_time_us = exact->solve_time.count();
                    rec.exact_size = static_cast<int>(exact->size);
                } catch (const SolverTimeout&) {
                    rec.exact_timed_out = true;
                    rec.exact_time_us = elapsed_us(exact_start);
                }
                if (exact) require_killchain_free(graph, *exact, "exact solver");

                auto qubo = encode_mvc(dual, cfg.penalty);
                AnnealParams anneal = cfg.anneal;
                anneal.seed = rng::derive_seed(cell, 2);
                const auto sample_start = Clock::now();
                const auto samples = sample_annealing(qubo, anneal);
                rec.sample_time_us = elapsed_us(sample_start);

                for (const auto& sample : samples.samples) {
                    const auto cover = decode(qubo, sample.x, dual);
                    if (cover.valid) {
                        require_killchain_free(graph, cover, "annealing sampler");
                    } else {
                        rec.invalid_count += sample.occurrences;
                    }
                }
                const auto best = decode(qubo, samples.best().x, dual);
                rec.best_sample_size = static_cast<int>(best.size);
                if (!rec.exact_timed_out) rec.size_diff = rec.best_sample_size - rec.exact_size;

                const auto greedy = solve_greedy(dual);
                rec.greedy_size = static_cast<int>(greedy.size);
                require_killchain_free(graph, greedy, "greedy solver");

                records.push_back(rec);
                if (on_record) on_record(rec);
            }
        }
    }
    return records;
}

std::vector<SummaryRow> summarize(const std::vector<BenchmarkRecord>& records) {
    if (records.empty()) throw InputError("cannot summarize an empty record list");

    std::vector<SummaryRow> rows;
    for (const auto& rec : records) {
        if (rows.empty() || rows.back().n_vulns != rec.n_vulns ||
            rows.back().edge_prob != rec.edge_prob) {
            SummaryRow row;
            row.n_vulns = rec.n_vulns;
            row.edge_prob = rec.edge_prob;
            rows.push_back(row);
        }
        auto& row = rows.back();
        row.trials += 1;
        row.mean_sample_time_us += static_cast<double>(rec.sample_time_us);
        row.invalid_total += rec.invalid_count;
        if (!rec.exact_timed_out) {
            row.exact_completed += 1;
            row.mean_size_diff += rec.size_diff;
            row.mean_exact_time_us += static_cast<double>(rec.exact_time_us);
        }
    }
    for (auto& row : rows) {
        row.mean_sample_time_us /= row.trials;
        if (row.exact_completed > 0) {
            row.mean_size_diff /= row.exact_completed;
            row.mean_exact_time_us /= row.exact_completed;
        }
    }
    return rows;
}

std::string records_to_csv(const std::vector<BenchmarkRecord>& records) {
    std::ostringstream out;
    out << "n_vulns,edge_prob,trial,seed,exact_size,best_sample_size,size_diff,"
           "exact_time_us,sample_time_us,invalid_count,greedy_size\n";
    for (const auto& r : records) {
        out << r.n_vulns << ',' << format_prob(r.edge_prob) << ',' << r.trial << ',' << r.seed
            << ',';
        if (r.exact_timed_out) {
            out << ",";  // exact_size and size_diff stay empty
            out << r.best_sample_size << ",,";
        } else {
            out << r.exact_size << ',' << r.best_sample_size << ',' << r.size_diff << ',';
        }
        out << r.exact_time_us << ',' << r.sample_time_us << ',' << r.invalid_count << ','
            << r.greedy_size << '\n';
    }
    return out.str();
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "n_vulns,edge_prob,trials,exact_completed,mean_size_diff,mean_exact_time_us,"
           "mean_sample_time_us,invalid_count\n";
    for (const auto& row : rows) {
        out << row.n_vulns << ',' << format_prob(row.edge_prob) << ',' << row.trials << ','
            << row.exact_completed << ',';
        if (row.exact_completed > 0) {
            out << format_mean(row.mean_size_diff) << ',' << format_mean(row.mean_exact_time_us);
        } else {
            out << ',';
        }
        out << ',' << format_mean(row.mean_sample_time_us) << ',' << row.invalid_total << '\n';
    }
    return out.str();
}

std::vector<std::string> write_plot_data(const std::vector<SummaryRow>& rows,
                                         const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::vector<double> probs;
    for (const auto& row : rows) {
        if (std::find(probs.begin(), probs.end(), row.edge_prob) == probs.end()) {
            probs.push_back(row.edge_prob);
        }
    }
    std::vector<std::string> paths;
    for (double p : probs) {
        const auto path =
            (std::filesystem::path(dir) / ("plot_" + format_prob(p) + ".dat")).string();
        std::ofstream out(path);
        if (!out) throw InputError("cannot open '" + path + "' for writing");
        out << "# n_vulns mean_exact_time_us mean_sample_time_us invalid_total mean_size_diff\n";
        for (const auto& row : rows) {
            if (row.edge_prob != p) continue;
            out << row.n_vulns << ' ' << format_mean(row.mean_exact_time_us) << ' '
                << format_mean(row.mean_sample_time_us) << ' ' << row.invalid_total << ' '
                << format_mean(row.mean_size_diff) << '\n';
        }
        paths.push_back(path);
    }
    return paths;
}

}  // namespace vulncover
