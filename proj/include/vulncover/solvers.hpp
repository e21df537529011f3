#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vulncover/dual.hpp"
#include "vulncover/graph.hpp"
#include "vulncover/qubo.hpp"

namespace vulncover {

enum class SolveMethod { Exact, BruteForce, Annealing, Greedy };

const char* to_string(SolveMethod m);

// A vertex cover candidate for a dual graph. `valid` is always recomputed
// by an explicit edge check, never trusted from the producer.
struct VertexCover {
    std::vector<VertexId> vertices;  // sorted by label, all Vuln kind
    std::size_t size = 0;
    bool valid = false;
    SolveMethod method = SolveMethod::Exact;
    std::chrono::microseconds solve_time{0};
};

// Simulated-annealing configuration. Each read derives its own generator
// stream from `seed`, so parallel and serial execution produce identical
// sample sets.
struct AnnealParams {
    int num_reads = 100;
    int sweeps = 1000;
    double initial_temperature = 10.0;
    double final_temperature = 0.1;
    std::uint64_t seed = 0;
};

struct Sample {
    BitVector x;
    double energy = 0.0;
    int occurrences = 0;

    bool operator==(const Sample&) const = default;
};

// Aggregated annealer output: distinct final states with occurrence counts,
// sorted by energy ascending (ties by bit-vector).
struct SampleSet {
    std::vector<Sample> samples;
    AnnealParams params;

    const Sample& best() const;

    bool operator==(const SampleSet& other) const { return samples == other.samples; }
};

// True iff every dual edge has at least one endpoint among `vertices`.
bool is_vertex_cover(const DualGraph& d, const std::vector<VertexId>& vertices);

// Exhaustive exact solver built on the independent-set complement: a subset
// is a cover iff its complement spans no dual edge. Enumerates all 2^n
// subsets and returns the minimum cover that is lexicographically smallest
// by sorted vertex label, which makes the result deterministic. Cost grows
// as 2^n by construction; pass a budget to bail out via SolverTimeout.
// Throws SolverError when the dual has more than 62 vertices.
VertexCover solve_exact(const DualGraph& d,
                        std::optional<std::chrono::microseconds> budget = std::nullopt);

// Independent QUBO oracle: enumerates all 2^n assignments (Gray-code order)
// and returns a global minimiser, ties broken by the smallest unsigned
// integer value of the bit-vector (bit i contributing 2^i). Refuses
// instances larger than max_vars.
std::pair<BitVector, double> solve_brute_force(const Qubo& q, int max_vars = 24);

// Metropolis single-spin-flip annealing with a geometric temperature
// schedule, num_reads independent restarts. Deterministic given the seed.
// Reads run in parallel; sample_annealing_serial is the reference
// implementation kept for testing and benchmarking, and produces an
// identical SampleSet.
SampleSet sample_annealing(const Qubo& q, const AnnealParams& params);
SampleSet sample_annealing_serial(const Qubo& q, const AnnealParams& params);

// Maps set bits through the Qubo's variable labels to dual vertices and
// re-checks cover validity explicitly. Never repairs an invalid cover.
VertexCover decode(const Qubo& q, const BitVector& x, const DualGraph& d);

// Maximal-matching 2-approximation: repeatedly takes both endpoints of an
// uncovered edge, scanning edges in canonical order. Always valid, never
// more than twice the minimum size.
VertexCover solve_greedy(const DualGraph& d);

}  // namespace vulncover
