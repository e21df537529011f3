#include "vulncover/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

#include "vulncover/errors.hpp"
#include "vulncover/rng.hpp"

namespace vulncover {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<VertexId> mask_to_vertices(const DualGraph& d, std::uint64_t mask) {
    std::vector<VertexId> out;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        out.push_back(vuln_id(d.label(std::countr_zero(m))));
    }
    return out;  // indices follow sorted labels, so the result is sorted
}

VertexCover make_cover(const DualGraph& d, std::vector<VertexId> vertices, SolveMethod method,
                       std::chrono::microseconds elapsed) {
    VertexCover cover;
    cover.vertices = std::move(vertices);
    cover.size = cover.vertices.size();
    cover.valid = is_vertex_cover(d, cover.vertices);
    cover.method = method;
    cover.solve_time = elapsed;
    return cover;
}

// Lexicographic order on the ascending index sequences of two equal-size
// bit masks. Smaller first index wins, matching order by sorted label.
bool lex_less(std::uint64_t a, std::uint64_t b) {
    while (a && b) {
        int ia = std::countr_zero(a);
        int ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

std::uint64_t bits_to_value(const BitVector& x) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) value |= std::uint64_t{1} << i;
    }
    return value;
}

// Dense symmetric coupling view plus per-variable neighbour lists; the
// annealer works against this instead of the map-backed Qubo.
struct DenseQubo {
    int n = 0;
    double offset = 0.0;
    std::vector<double> linear;
    std::vector<std::vector<std::pair<int, double>>> neighbours;

    explicit DenseQubo(const Qubo& q)
        : n(q.size()), offset(q.offset()), linear(q.linear_terms()), neighbours(q.size()) {
        for (const auto& [key, value] : q.quadratic()) {
            if (value == 0.0) continue;
            neighbours[key.first].emplace_back(key.second, value);
            neighbours[key.second].emplace_back(key.first, value);
        }
    }
};

// One independent annealing read. Keeps the local field
//   f_i = linear_i + sum_j Q_sym[i][j] x_j
// incremental so a flip proposal costs O(1) and an accepted flip costs
// O(deg). Returns the final state of the schedule.
BitVector anneal_read(const DenseQubo& dq, const AnnealParams& params, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    BitVector x(dq.n);
    for (int i = 0; i < dq.n; ++i) x[i] = static_cast<std::uint8_t>(gen() & 1);

    std::vector<double> field = dq.linear;
    for (int i = 0; i < dq.n; ++i) {
        if (!x[i]) continue;
        for (const auto& [j, w] : dq.neighbours[i]) field[j] += w;
    }

    const double t0 = params.initial_temperature;
    const double t1 = params.final_temperature;
    const double cool = params.sweeps > 1 ? std::pow(t1 / t0, 1.0 / (params.sweeps - 1)) : 1.0;
    double temperature = t0;
    for (int sweep = 0; sweep < params.sweeps; ++sweep, temperature *= cool) {
        for (int i = 0; i < dq.n; ++i) {
            const double sign = x[i] ? -1.0 : 1.0;
            const double delta = sign * field[i];
            bool accept = delta <= 0.0;
            if (!accept) {
                const double ratio = delta / temperature;
                // exp underflows to an always-miss well before 700
                accept = ratio < 700.0 && rng::canonical(gen) < std::exp(-ratio);
            }
            if (accept) {
                x[i] ^= 1;
                for (const auto& [j, w] : dq.neighbours[i]) field[j] += sign * w;
            }
        }
    }
    return x;
}

SampleSet aggregate_reads(const Qubo& q, const AnnealParams& params,
                          std::vector<BitVector> finals) {
    // Distinct states with occurrence counts; recompute energies from the
    // Qubo itself so stored energies match energy(q, x) exactly.
    std::map<BitVector, int> counts;
    for (auto& x : finals) ++counts[std::move(x)];
    SampleSet set;
    set.params = params;
    for (auto& [x, count] : counts) {
        set.samples.push_back({x, energy(q, x), count});
    }
    std::stable_sort(set.samples.begin(), set.samples.end(),
                     [](const Sample& a, const Sample& b) {
                         if (a.energy != b.energy) return a.energy < b.energy;
                         return a.x < b.x;
                     });
    return set;
}

void check_params(const AnnealParams& params) {
    if (params.num_reads < 1 || params.sweeps < 1) {
        throw InputError("num_reads and sweeps must be >= 1");
    }
    if (!(params.initial_temperature > 0.0) || !(params.final_temperature > 0.0)) {
        throw InputError("temperatures must be positive");
    }
    if (!(params.final_temperature < params.initial_temperature)) {
        throw InputError("final temperature must be below initial temperature");
    }
}

}  // namespace

const char* to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::Exact: return "exact";
        case SolveMethod::BruteForce: return "brute";
        case SolveMethod::Annealing: return "anneal";
        case SolveMethod::Greedy: return "greedy";
    }
    return "unknown";
}

const Sample& SampleSet::best() const {
    if (samples.empty()) throw SolverError("sample set is empty");
    return samples.front();
}

bool is_vertex_cover(const DualGraph& d, const std::vector<VertexId>& vertices) {
    std::vector<char> in_cover(d.vertex_count(), 0);
    for (const auto& v : vertices) {
        if (v.kind != VertexKind::Vuln) return false;
        int idx = d.index_of(v.label);
        if (idx < 0) return false;
        in_cover[idx] = 1;
    }
    for (const auto& e : d.edges()) {
        if (!in_cover[e.u] && !in_cover[e.v]) return false;
    }
    return true;
}

VertexCover solve_exact(const DualGraph& d, std::optional<std::chrono::microseconds> budget) {
    const int n = d.vertex_count();
    if (n > 62) {
        throw SolverError("exact enumeration refuses duals with more than 62 vertices");
    }
    const auto start = Clock::now();
    const auto deadline =
        budget ? std::optional<Clock::time_point>(start + *budget) : std::nullopt;

    std::vector<std::uint64_t> adjacency(n, 0);
    for (const auto& e : d.edges()) {
        adjacency[e.u] |= std::uint64_t{1} << e.v;
        adjacency[e.v] |= std::uint64_t{1} << e.u;
    }
    const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;

    int best_size = n + 1;
    std::uint64_t best_mask = full;
    const std::uint64_t last = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < last; ++mask) {
        if (deadline && (mask & 0xFFFF) == 0 && Clock::now() > *deadline) {
            throw SolverTimeout("exact solve exceeded its time budget");
        }
        const int size = std::popcount(mask);
        if (size > best_size) continue;
        // Cover check in complement form: the unchosen vertices must form
        // an independent set.
        const std::uint64_t out = full & ~mask;
        bool independent = true;
        for (std::uint64_t m = out; m; m &= m - 1) {
            if (adjacency[std::countr_zero(m)] & out) {
                independent = false;
                break;
            }
        }
        if (!independent) continue;
        if (size < best_size || (size == best_size && lex_less(mask, best_mask))) {
            best_size = size;
            best_mask = mask;
        }
    }

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return make_cover(d, mask_to_vertices(d, best_mask), SolveMethod::Exact, elapsed);
}

std::pair<BitVector, double> solve_brute_force(const Qubo& q, int max_vars) {
    const int n = q.size();
    if (n > max_vars) {
        throw SolverError("brute force refuses " + std::to_string(n) + " variables (cap " +
                          std::to_string(max_vars) + ")");
    }
    if (n == 0) return {BitVector{}, q.offset()};

    // Symmetrised coupling rows for O(n) flip deltas along a Gray-code walk.
    std::vector<std::vector<double>> coupling(n, std::vector<double>(n, 0.0));
    for (const auto& [key, value] : q.quadratic()) {
        coupling[key.first][key.second] += value;
        coupling[key.second][key.first] += value;
    }

    BitVector x(n, 0);
    double current = q.offset();
    double best_energy = current;
    std::uint64_t best_value = 0;

    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t step = 1; step < total; ++step) {
        const std::uint64_t next_gray = step ^ (step >> 1);
        const int bit = std::countr_zero(gray ^ next_gray);
        gray = next_gray;

        double delta = q.linear(bit);
        const auto& row = coupling[bit];
        for (int j = 0; j < n; ++j) {
            if (x[j]) delta += row[j];
        }
        if (x[bit]) delta = -delta;
        x[bit] ^= 1;
        current += delta;

        if (current < best_energy || (current == best_energy && gray < best_value)) {
            best_energy = current;
            best_value = gray;
        }
    }

    BitVector best(n, 0);
    for (int i = 0; i < n; ++i) best[i] = static_cast<std::uint8_t>((best_value >> i) & 1);
    return {best, energy(q, best)};  // recomputed to shed accumulated error
}

SampleSet sample_annealing(const Qubo& q, const AnnealParams& params) {
    check_params(params);
    const DenseQubo dq(q);
    std::vector<BitVector> finals(params.num_reads);
#pragma omp parallel for schedule(dynamic)
    for (int read = 0; read < params.num_reads; ++read) {
        finals[read] = anneal_read(dq, params, rng::derive_seed(params.seed, read));
    }
    return aggregate_reads(q, params, std::move(finals));
}

SampleSet sample_annealing_serial(const Qubo& q, const AnnealParams& params) {
    check_params(params);
    const DenseQubo dq(q);
    std::vector<BitVector> finals(params.num_reads);
    for (int read = 0; read < params.num_reads; ++read) {
        finals[read] = anneal_read(dq, params, rng::derive_seed(params.seed, read));
    }
    return aggregate_reads(q, params, std::move(finals));
}

VertexCover decode(const Qubo& q, const BitVector& x, const DualGraph& d) {
    if (static_cast<int>(x.size()) != q.size()) {
        throw InputError("assignment length does not match variable count");
    }
    if (q.size() != d.vertex_count()) {
        throw InputError("qubo variable count does not match dual vertex count");
    }
    std::vector<VertexId> vertices;
    for (int i = 0; i < q.size(); ++i) {
        if (x[i]) vertices.push_back(vuln_id(q.var_labels()[i]));
    }
    std::sort(vertices.begin(), vertices.end());
    return make_cover(d, std::move(vertices), SolveMethod::Annealing, std::chrono::microseconds{0});
}

VertexCover solve_greedy(const DualGraph& d) {
    const auto start = Clock::now();
    std::vector<char> covered(d.vertex_count(), 0);
    std::vector<VertexId> vertices;
    for (const auto& e : d.edges()) {
        if (covered[e.u] || covered[e.v]) continue;
        covered[e.u] = 1;
        covered[e.v] = 1;
        vertices.push_back(vuln_id(d.label(e.u)));
        vertices.push_back(vuln_id(d.label(e.v)));
    }
    std::sort(vertices.begin(), vertices.end());
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return make_cover(d, std::move(vertices), SolveMethod::Greedy, elapsed);
}

}  // namespace vulncover
