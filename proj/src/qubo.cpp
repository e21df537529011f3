#include "vulncover/qubo.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "vulncover/errors.hpp"

namespace vulncover {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Qubo::Qubo(std::vector<double> linear, std::map<std::pair<int, int>, double> quadratic,
           double offset, std::vector<std::string> var_labels)
    : linear_(std::move(linear)),
      quadratic_(std::move(quadratic)),
      offset_(offset),
      var_labels_(std::move(var_labels)) {
    const int n = size();
    for (const auto& [key, value] : quadratic_) {
        (void)value;
        if (key.first < 0 || key.second >= n || key.first >= key.second) {
            throw InputError("quadratic coefficients must be strictly upper triangular");
        }
    }
    if (!var_labels_.empty() && static_cast<int>(var_labels_.size()) != n) {
        throw InputError("variable label count must match variable count");
    }
}

Qubo encode_mvc(const DualGraph& d, double penalty) {
    return encode_weighted_mvc(d, penalty, 0.0);
}

std::vector<double> connectivity_weights(const DualGraph& d) {
    const int n = d.vertex_count();
    long long max_sum = 0;
    for (int v = 0; v < n; ++v) max_sum = std::max(max_sum, d.weight_sum(v));
    std::vector<double> w(n, 0.0);
    if (max_sum == 0) return w;
    for (int v = 0; v < n; ++v) {
        w[v] = static_cast<double>(d.weight_sum(v)) / static_cast<double>(max_sum);
    }
    return w;
}

double max_connectivity_bias(const DualGraph& d) {
    const auto w = connectivity_weights(d);
    double total = 0.0;
    for (double x : w) total += x;
    return 1.0 / (1.0 + total);
}

Qubo encode_weighted_mvc(const DualGraph& d, double penalty, double bias) {
    if (penalty <= 1.0) {
        throw InputError("penalty must exceed 1, otherwise uncovering an edge can pay off");
    }
    const double bias_bound = max_connectivity_bias(d);
    if (bias < 0.0 || bias >= bias_bound) {
        throw InputError("bias must lie in [0, " + format_double(bias_bound) +
                         ") to preserve minimum cover cardinality");
    }
    const int n = d.vertex_count();
    const auto w = connectivity_weights(d);
    std::vector<double> linear(n, 0.0);
    for (int v = 0; v < n; ++v) {
        linear[v] = (1.0 - bias * w[v]) - penalty * d.degree(v);
    }
    std::map<std::pair<int, int>, double> quadratic;
    for (const auto& e : d.edges()) quadratic[{e.u, e.v}] = penalty;
    const double offset = penalty * static_cast<double>(d.edge_count());
    return Qubo(std::move(linear), std::move(quadratic), offset, d.labels());
}

double energy(const Qubo& q, const BitVector& x) {
    if (static_cast<int>(x.size()) != q.size()) {
        throw InputError("assignment length does not match variable count");
    }
    double e = q.offset();
    for (int i = 0; i < q.size(); ++i) {
        if (x[i]) e += q.linear(i);
    }
    for (const auto& [key, value] : q.quadratic()) {
        if (x[key.first] && x[key.second]) e += value;
    }
    return e;
}

double ising_energy(const IsingModel& m, const SpinVector& spins) {
    if (spins.size() != m.fields.size()) {
        throw InputError("spin count does not match field count");
    }
    double e = m.offset;
    for (std::size_t j = 0; j < spins.size(); ++j) e += m.fields[j] * spins[j];
    for (const auto& [key, value] : m.couplings) {
        e += value * spins[key.first] * spins[key.second];
    }
    return e;
}

IsingModel to_ising(const Qubo& q) {
    // Substitute x_i = (1 + sigma_i) / 2 and collect terms.
    IsingModel m;
    m.fields.assign(q.size(), 0.0);
    for (int i = 0; i < q.size(); ++i) {
        m.fields[i] += q.linear(i) / 2.0;
        m.offset += q.linear(i) / 2.0;
    }
    for (const auto& [key, value] : q.quadratic()) {
        m.couplings[key] = value / 4.0;
        m.fields[key.first] += value / 4.0;
        m.fields[key.second] += value / 4.0;
        m.offset += value / 4.0;
    }
    m.offset += q.offset();
    return m;
}

std::string to_qubo_text(const Qubo& q) {
    std::ostringstream out;
    out << q.size() << ' ' << format_double(q.offset()) << '\n';
    for (int i = 0; i < q.size(); ++i) {
        if (q.linear(i) != 0.0) {
            out << i << ' ' << i << ' ' << format_double(q.linear(i)) << '\n';
        }
        auto lo = q.quadratic().lower_bound({i, 0});
        auto hi = q.quadratic().lower_bound({i + 1, 0});
        for (auto it = lo; it != hi; ++it) {
            if (it->second != 0.0) {
                out << i << ' ' << it->first.second << ' ' << format_double(it->second) << '\n';
            }
        }
    }
    return out.str();
}

Qubo parse_qubo_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InputError("qubo text is empty");
    int n = 0;
    double offset = 0.0;
    {
        std::istringstream header(line);
        if (!(header >> n >> offset) || n < 0) {
            throw InputError("qubo header must be 'n offset'");
        }
    }
    std::vector<double> linear(n, 0.0);
    std::map<std::pair<int, int>, double> quadratic;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream entry(line);
        int i = 0, j = 0;
        double value = 0.0;
        if (!(entry >> i >> j >> value)) {
            throw InputError("malformed qubo entry at line " + std::to_string(line_no));
        }
        if (i < 0 || j < i || j >= n) {
            throw InputError("qubo entry indices out of range at line " + std::to_string(line_no));
        }
        if (i == j) {
            linear[i] += value;
        } else {
            quadratic[{i, j}] += value;
        }
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return Qubo(std::move(linear), std::move(quadratic), offset, std::move(labels));
}

}  // namespace vulncover
