#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vulncover {

enum class VertexKind { Host, Vuln };

// A vertex is its partition plus an opaque label. The same label string may
// appear in both partitions and names two different vertices; hostnames and
// vulnerability ids live in separate namespaces.
struct VertexId {
    VertexKind kind;
    std::string label;

    auto operator<=>(const VertexId&) const = default;
};

inline VertexId host_id(std::string label) {
    return VertexId{VertexKind::Host, std::move(label)};
}
inline VertexId vuln_id(std::string label) {
    return VertexId{VertexKind::Vuln, std::move(label)};
}

// One host-first scan record: a host and the vulnerabilities found on it.
struct HostRecord {
    std::string host;
    std::vector<std::string> vulns;

    bool operator==(const HostRecord&) const = default;
};

// A path through the vulnerability partition. Consecutive vulnerabilities
// share the witness host between them: witnesses[i] is adjacent to both
// vulns[i] and vulns[i+1].
struct KillChain {
    std::vector<VertexId> vulns;      // length >= 2
    std::vector<VertexId> witnesses;  // length == vulns.size() - 1
};

// Immutable bipartite graph: host vertices on one side, vulnerability
// vertices on the other, an edge meaning "this host is affected by this
// vulnerability". Labels are stored sorted and adjacency is kept for both
// partitions, so lookups are index-based internally.
//
// Instances never change after construction and are safe to read from any
// number of threads.
class VulnerabilityGraph {
public:
    VulnerabilityGraph() = default;

    // Validating constructor: labels must be non-empty, edges must join an
    // existing vulnerability to an existing host. Duplicate labels and
    // duplicate edges collapse.
    VulnerabilityGraph(std::vector<std::string> host_labels,
                       std::vector<std::string> vuln_labels,
                       const std::vector<std::pair<std::string, std::string>>& vuln_host_edges);

    std::size_t host_count() const { return hosts_.size(); }
    std::size_t vuln_count() const { return vulns_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<std::string>& host_labels() const { return hosts_; }
    const std::vector<std::string>& vuln_labels() const { return vulns_; }

    // -1 when the label is not present.
    int host_index(const std::string& label) const;
    int vuln_index(const std::string& label) const;

    bool contains(const VertexId& v) const;
    bool has_edge(const std::string& vuln_label, const std::string& host_label) const;

    // Sorted index adjacency, used by the dual builder and the verifier.
    const std::vector<int>& vuln_neighbors(int vuln_index) const { return vuln_adj_[vuln_index]; }
    const std::vector<int>& host_neighbors(int host_index) const { return host_adj_[host_index]; }

    bool operator==(const VulnerabilityGraph&) const = default;

private:
    std::vector<std::string> hosts_;          // sorted, unique
    std::vector<std::string> vulns_;          // sorted, unique
    std::vector<std::vector<int>> host_adj_;  // host index -> sorted vuln indices
    std::vector<std::vector<int>> vuln_adj_;  // vuln index -> sorted host indices
    std::size_t edge_count_ = 0;
};

// Builds the graph from host-first scan records: one vertex per distinct
// host label, one per distinct vulnerability label, one edge per distinct
// (host, vuln) mention. Throws InputError on empty labels.
VulnerabilityGraph build_graph(const std::vector<HostRecord>& records);

// All vertices sharing an edge with v, sorted by label. Always lies in the
// opposite partition. Throws LookupError when v is not in the graph.
std::vector<VertexId> neighbors(const VulnerabilityGraph& g, const VertexId& v);

// Shortest kill chain present in the graph, if any: two distinct
// vulnerabilities plus the host that witnesses them. Returns nullopt
// exactly when no host has two distinct vulnerability neighbours, i.e.
// the graph is disconnected on the vulnerability side.
std::optional<KillChain> find_killchain(const VulnerabilityGraph& g);

}  // namespace vulncover
