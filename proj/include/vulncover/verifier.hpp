#pragma once

#include <vector>

#include "vulncover/graph.hpp"
#include "vulncover/solvers.hpp"

namespace vulncover {

// Outcome of patching a vertex set out of a vulnerability graph.
// killchain_free holds exactly when find_killchain(residual) is absent.
struct RemediationReport {
    std::vector<VertexId> patched;
    VulnerabilityGraph residual;
    bool killchain_free = false;
    std::size_t residual_edge_count = 0;
};

// Returns the graph with the patched vulnerabilities deleted. All hosts are
// retained, including hosts left without any vulnerability; surviving edges
// are exactly those not incident to a patched vertex. The source graph is
// not modified. Throws InputError when `patched` contains anything that is
// not a vulnerability vertex of g.
VulnerabilityGraph remove_vulns(const VulnerabilityGraph& g,
                                const std::vector<VertexId>& patched);

// Removes the cover's vertices and checks that no kill chain survives.
// Accepts any vertex subset, valid cover or not, so invalid sampler output
// can be scored; when the cover is a valid cover of build_dual(g) the
// report is guaranteed kill-chain free.
RemediationReport verify_remediation(const VulnerabilityGraph& g, const VertexCover& cover);

}  // namespace vulncover
