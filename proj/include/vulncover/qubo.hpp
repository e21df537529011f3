#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vulncover/dual.hpp"

namespace vulncover {

using BitVector = std::vector<std::uint8_t>;  // entries 0/1
using SpinVector = std::vector<int>;          // entries -1/+1

// Quadratic unconstrained binary optimisation problem over n binary
// variables: minimise offset + sum_i linear[i] x_i + sum_{i<j} q_ij x_i x_j.
// Quadratic coefficients are stored strictly upper-triangular (i < j).
// var_labels maps each variable index back to its dual vertex.
class Qubo {
public:
    Qubo() = default;
    Qubo(std::vector<double> linear, std::map<std::pair<int, int>, double> quadratic,
         double offset, std::vector<std::string> var_labels);

    int size() const { return static_cast<int>(linear_.size()); }
    double linear(int i) const { return linear_[i]; }
    const std::vector<double>& linear_terms() const { return linear_; }
    const std::map<std::pair<int, int>, double>& quadratic() const { return quadratic_; }
    double offset() const { return offset_; }
    const std::vector<std::string>& var_labels() const { return var_labels_; }

    bool operator==(const Qubo&) const = default;

private:
    std::vector<double> linear_;
    std::map<std::pair<int, int>, double> quadratic_;  // keys (i, j) with i < j
    double offset_ = 0.0;
    std::vector<std::string> var_labels_;  // index -> dual vertex label
};

// Spin model equivalent of a Qubo under x = (1 + sigma) / 2:
// energy(sigma) = offset + sum_j fields[j] sigma_j
//               + sum_{i<j} couplings[(i,j)] sigma_i sigma_j.
struct IsingModel {
    std::vector<double> fields;
    std::map<std::pair<int, int>, double> couplings;
    double offset = 0.0;
};

// Minimum-vertex-cover encoding of the dual:
//   minimise sum_v x_v + penalty * sum_{(u,v) in E} (1 - x_u)(1 - x_v)
// expanded into QUBO coefficients. Any penalty > 1 makes every non-cover
// assignment cost more than any cover, so the ground states are exactly the
// minimum vertex covers and the ground energy equals the cover size.
// Throws InputError when penalty <= 1.
Qubo encode_mvc(const DualGraph& d, double penalty = 2.0);

// Normalised connectivity weight per dual vertex: incident edge weight sum
// divided by the maximum such sum (all zeros when the dual has no edges).
std::vector<double> connectivity_weights(const DualGraph& d);

// Exclusive upper bound for the bias accepted by encode_weighted_mvc:
// 1 / (1 + sum_v w_v) with w_v the normalised connectivity weights.
double max_connectivity_bias(const DualGraph& d);

// Weighted variant: the unit vertex cost becomes 1 - bias * w_v. Within the
// bias bound every ground state is still a cardinality-minimum cover, and
// among those the ground states maximise total connectivity weight.
// bias = 0 reproduces encode_mvc exactly.
Qubo encode_weighted_mvc(const DualGraph& d, double penalty, double bias);

// Throws InputError when x.size() != q.size().
double energy(const Qubo& q, const BitVector& x);

double ising_energy(const IsingModel& m, const SpinVector& spins);

// Exact energy-preserving conversion; offsets fold into the Ising offset.
IsingModel to_ising(const Qubo& q);

// Plain-text coordinate serialisation: header "n offset", then one
// "i i q_ii" line per nonzero linear term and one "i j q_ij" line per
// nonzero quadratic term, in ascending (i, j) order.
std::string to_qubo_text(const Qubo& q);

// Inverse of to_qubo_text. Variable labels are not part of the format, so
// the result carries synthetic labels "0", "1", ...
Qubo parse_qubo_text(const std::string& text);

}  // namespace vulncover
