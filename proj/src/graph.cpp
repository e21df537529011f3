#include "vulncover/graph.hpp"

#include <algorithm>
#include <set>

#include "vulncover/errors.hpp"

namespace vulncover {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

int index_in(const std::vector<std::string>& sorted, const std::string& label) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), label);
    if (it == sorted.end() || *it != label) return -1;
    return static_cast<int>(it - sorted.begin());
}

}  // namespace

VulnerabilityGraph::VulnerabilityGraph(
    std::vector<std::string> host_labels, std::vector<std::string> vuln_labels,
    const std::vector<std::pair<std::string, std::string>>& vuln_host_edges) {
    for (const auto& h : host_labels) {
        if (h.empty()) throw InputError("host label must be non-empty");
    }
    for (const auto& v : vuln_labels) {
        if (v.empty()) throw InputError("vulnerability label must be non-empty");
    }
    hosts_ = sorted_unique(std::move(host_labels));
    vulns_ = sorted_unique(std::move(vuln_labels));
    host_adj_.assign(hosts_.size(), {});
    vuln_adj_.assign(vulns_.size(), {});

    std::set<std::pair<int, int>> seen;  // (vuln, host) index pairs
    for (const auto& [vuln, host] : vuln_host_edges) {
        int vi = index_in(vulns_, vuln);
        int hi = index_in(hosts_, host);
        if (vi < 0) throw InputError("edge references unknown vulnerability '" + vuln + "'");
        if (hi < 0) throw InputError("edge references unknown host '" + host + "'");
        if (!seen.emplace(vi, hi).second) continue;
        vuln_adj_[vi].push_back(hi);
        host_adj_[hi].push_back(vi);
    }
    for (auto& a : vuln_adj_) std::sort(a.begin(), a.end());
    for (auto& a : host_adj_) std::sort(a.begin(), a.end());
    edge_count_ = seen.size();
}

int VulnerabilityGraph::host_index(const std::string& label) const {
    return index_in(hosts_, label);
}

int VulnerabilityGraph::vuln_index(const std::string& label) const {
    return index_in(vulns_, label);
}

bool VulnerabilityGraph::contains(const VertexId& v) const {
    return v.kind == VertexKind::Host ? host_index(v.label) >= 0 : vuln_index(v.label) >= 0;
}

bool VulnerabilityGraph::has_edge(const std::string& vuln_label,
                                  const std::string& host_label) const {
    int vi = vuln_index(vuln_label);
    int hi = host_index(host_label);
    if (vi < 0 || hi < 0) return false;
    return std::binary_search(vuln_adj_[vi].begin(), vuln_adj_[vi].end(), hi);
}

VulnerabilityGraph build_graph(const std::vector<HostRecord>& records) {
    std::vector<std::string> hosts;
    std::vector<std::string> vulns;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& rec : records) {
        if (rec.host.empty()) throw InputError("host label must be non-empty");
        hosts.push_back(rec.host);
        for (const auto& v : rec.vulns) {
            if (v.empty()) {
                throw InputError("vulnerability label must be non-empty (host '" + rec.host + "')");
            }
            vulns.push_back(v);
            edges.emplace_back(v, rec.host);
        }
    }
    return VulnerabilityGraph(std::move(hosts), std::move(vulns), edges);
}

std::vector<VertexId> neighbors(const VulnerabilityGraph& g, const VertexId& v) {
    std::vector<VertexId> out;
    if (v.kind == VertexKind::Vuln) {
        int vi = g.vuln_index(v.label);
        if (vi < 0) throw LookupError("unknown vulnerability '" + v.label + "'");
        for (int hi : g.vuln_neighbors(vi)) out.push_back(host_id(g.host_labels()[hi]));
    } else {
        int hi = g.host_index(v.label);
        if (hi < 0) throw LookupError("unknown host '" + v.label + "'");
        for (int vi : g.host_neighbors(hi)) out.push_back(vuln_id(g.vuln_labels()[vi]));
    }
    return out;  // adjacency is index-sorted, so labels come out sorted
}

std::optional<KillChain> find_killchain(const VulnerabilityGraph& g) {
    // A length-2 chain through one witness host is necessary and sufficient:
    // any longer chain contains such a vulnerability-host-vulnerability
    // sub-path, so the first host with two vulnerability neighbours decides.
    for (std::size_t hi = 0; hi < g.host_count(); ++hi) {
        const auto& adj = g.host_neighbors(static_cast<int>(hi));
        if (adj.size() >= 2) {
            KillChain chain;
            chain.vulns = {vuln_id(g.vuln_labels()[adj[0]]), vuln_id(g.vuln_labels()[adj[1]])};
            chain.witnesses = {host_id(g.host_labels()[hi])};
            return chain;
        }
    }
    return std::nullopt;
}

}  // namespace vulncover
