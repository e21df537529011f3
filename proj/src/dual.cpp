#include "vulncover/dual.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>

#include "vulncover/errors.hpp"

namespace vulncover {

namespace {

// |A ∩ B| for two sorted index vectors.
int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

DualGraph assemble_dual(const VulnerabilityGraph& g, const std::vector<int>& pair_weights) {
    const int n = static_cast<int>(g.vuln_count());
    std::vector<DualEdge> edges;
    int k = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++k) {
            if (pair_weights[k] > 0) edges.push_back({u, v, pair_weights[k]});
        }
    }
    return DualGraph(g.vuln_labels(), std::move(edges));
}

}  // namespace

DualGraph::DualGraph(std::vector<std::string> vuln_labels, std::vector<DualEdge> edges)
    : labels_(std::move(vuln_labels)), edges_(std::move(edges)) {
    if (!std::is_sorted(labels_.begin(), labels_.end()) ||
        std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw InputError("dual vertex labels must be sorted and unique");
    }
    const int n = vertex_count();
    for (const auto& e : edges_) {
        if (e.u < 0 || e.v >= n || e.u >= e.v) {
            throw InputError("dual edge endpoints must satisfy 0 <= u < v < n");
        }
        if (e.weight < 1) throw InputError("dual edge weights must be >= 1");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const DualEdge& a, const DualEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
            throw InputError("duplicate dual edge");
        }
    }
    adj_.assign(n, {});
    weight_sums_.assign(n, 0);
    for (const auto& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.weight);
        adj_[e.v].emplace_back(e.u, e.weight);
        weight_sums_[e.u] += e.weight;
        weight_sums_[e.v] += e.weight;
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int DualGraph::index_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

int DualGraph::weight(int u, int v) const {
    if (u == v) return 0;
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, 0));
    if (it == a.end() || it->first != v) return 0;
    return it->second;
}

DualGraph build_dual(const VulnerabilityGraph& g) {
    const int n = static_cast<int>(g.vuln_count());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::vector<int> weights(pairs.size(), 0);

    // Each pair is visited exactly once and written to its own slot, so the
    // schedule cannot affect the result.
    const long long total = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long long k = 0; k < total; ++k) {
        const auto [u, v] = pairs[static_cast<std::size_t>(k)];
        weights[static_cast<std::size_t>(k)] =
            intersection_size(g.vuln_neighbors(u), g.vuln_neighbors(v));
    }
    return assemble_dual(g, weights);
}

DualGraph build_dual_serial(const VulnerabilityGraph& g) {
    const int n = static_cast<int>(g.vuln_count());
    std::vector<int> weights;
    weights.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            weights.push_back(intersection_size(g.vuln_neighbors(u), g.vuln_neighbors(v)));
        }
    }
    return assemble_dual(g, weights);
}

std::vector<VertexId> shared_hosts(const VulnerabilityGraph& g, const VertexId& u,
                                   const VertexId& v) {
    if (u.kind != VertexKind::Vuln || v.kind != VertexKind::Vuln) {
        throw InputError("shared_hosts takes two vulnerability vertices");
    }
    if (u.label == v.label) throw InputError("shared_hosts requires two distinct vulnerabilities");
    int ui = g.vuln_index(u.label);
    int vi = g.vuln_index(v.label);
    if (ui < 0) throw LookupError("unknown vulnerability '" + u.label + "'");
    if (vi < 0) throw LookupError("unknown vulnerability '" + v.label + "'");

    const auto& a = g.vuln_neighbors(ui);
    const auto& b = g.vuln_neighbors(vi);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    std::vector<VertexId> out;
    out.reserve(common.size());
    for (int hi : common) out.push_back(host_id(g.host_labels()[hi]));
    return out;
}

}  // namespace vulncover
