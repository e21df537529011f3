#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vulncover/graph.hpp"

namespace vulncover {

// Weighted edge of the connectivity dual; u < v index into the vertex
// labels, weight counts the hosts the two vulnerabilities share.
struct DualEdge {
    int u;
    int v;
    int weight;

    bool operator==(const DualEdge&) const = default;
};

// The connectivity dual of a vulnerability graph: one vertex per
// vulnerability, an edge between two vulnerabilities iff they co-occur on
// at least one host, weighted by the number of shared hosts. Vertices with
// no shared hosts stay in the graph with degree zero.
//
// Immutable after construction; concurrent reads are safe.
class DualGraph {
public:
    DualGraph() = default;
    DualGraph(std::vector<std::string> vuln_labels, std::vector<DualEdge> edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    int index_of(const std::string& label) const;  // -1 when absent

    // Edges sorted by (u, v).
    const std::vector<DualEdge>& edges() const { return edges_; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    // Sum of the weights of edges incident to v.
    long long weight_sum(int v) const { return weight_sums_[v]; }
    // 0 when the pair is not adjacent.
    int weight(int u, int v) const;
    // (neighbour, weight) pairs sorted by neighbour index.
    const std::vector<std::pair<int, int>>& adjacent(int v) const { return adj_[v]; }

    bool operator==(const DualGraph& other) const {
        return labels_ == other.labels_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> labels_;  // sorted, unique
    std::vector<DualEdge> edges_;      // u < v, sorted by (u, v), weights >= 1
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<long long> weight_sums_;
};

// Builds the dual by intersecting host neighbourhoods over all
// vulnerability pairs. Pairs are processed in parallel; the result is
// identical to build_dual_serial for every input.
DualGraph build_dual(const VulnerabilityGraph& g);

// Single-threaded reference implementation, kept for testing and for the
// kernel benchmark.
DualGraph build_dual_serial(const VulnerabilityGraph& g);

// The hosts adjacent to both u and v, sorted by label. This is the
// independent oracle for dual edge weights. Throws InputError unless u and
// v are two distinct vulnerabilities present in g.
std::vector<VertexId> shared_hosts(const VulnerabilityGraph& g, const VertexId& u,
                                   const VertexId& v);

}  // namespace vulncover
