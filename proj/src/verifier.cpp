#include "vulncover/verifier.hpp"

#include <algorithm>

#include "vulncover/errors.hpp"

namespace vulncover {

VulnerabilityGraph remove_vulns(const VulnerabilityGraph& g,
                                const std::vector<VertexId>& patched) {
    std::vector<char> drop(g.vuln_count(), 0);
    for (const auto& v : patched) {
        if (v.kind != VertexKind::Vuln) {
            throw InputError("'" + v.label + "' is not a vulnerability vertex");
        }
        int idx = g.vuln_index(v.label);
        if (idx < 0) throw InputError("unknown vulnerability '" + v.label + "'");
        drop[idx] = 1;
    }

    std::vector<std::string> vulns;
    for (std::size_t i = 0; i < g.vuln_count(); ++i) {
        if (!drop[i]) vulns.push_back(g.vuln_labels()[i]);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < g.vuln_count(); ++i) {
        if (drop[i]) continue;
        for (int hi : g.vuln_neighbors(static_cast<int>(i))) {
            edges.emplace_back(g.vuln_labels()[i], g.host_labels()[hi]);
        }
    }
    return VulnerabilityGraph(g.host_labels(), std::move(vulns), edges);
}

RemediationReport verify_remediation(const VulnerabilityGraph& g, const VertexCover& cover) {
    RemediationReport report;
    report.patched = cover.vertices;
    report.residual = remove_vulns(g, cover.vertices);
    report.killchain_free = !find_killchain(report.residual).has_value();
    report.residual_edge_count = report.residual.edge_count();
    return report;
}

}  // namespace vulncover
