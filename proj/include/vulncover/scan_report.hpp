#pragma once

#include <string>
#include <vector>

#include "vulncover/dual.hpp"
#include "vulncover/graph.hpp"
#include "vulncover/solvers.hpp"

namespace vulncover {

// Parsed host-first scan report. Scanners export a list of hosts, each with
// the vulnerabilities found on it; this is the ingestion format.
struct ScanReport {
    int version = 1;
    std::vector<HostRecord> hosts;
    std::vector<std::string> warnings;  // e.g. deduplicated vuln mentions
};

// Parses the JSON scan-report format:
//   {"version": 1, "hosts": [{"id": "a", "vulns": ["1", "2"]}, ...]}
// "version" may be omitted and defaults to 1. Duplicate vulnerability
// mentions on one host are deduplicated with a warning; duplicate host ids
// and malformed documents raise InputError (syntax errors carry the byte
// position reported by the JSON parser).
ScanReport parse_scan_report(const std::string& text);

std::string serialize_scan_report(const ScanReport& report);

// Host-first view of an existing graph, ready for serialization. Isolated
// vulnerabilities cannot be expressed host-first and are dropped.
ScanReport report_from_graph(const VulnerabilityGraph& g);

// One remediation step: a vulnerability to patch, its normalised
// connectivity weight in the dual, and how many hosts it affects.
struct PatchPlanEntry {
    std::string vuln;
    double connectivity = 0.0;
    int hosts_affected = 0;

    bool operator==(const PatchPlanEntry&) const = default;
};

// An ordered patching plan: exactly the cover's vertices, sorted by
// descending connectivity (ties by label), plus the kill-chain elimination
// certificate for the residual graph.
struct PatchPlan {
    std::vector<PatchPlanEntry> entries;
    bool killchain_free = false;
};

// Builds the plan for a solved cover. Expects d == build_dual(g) and a
// valid cover of d; refuses otherwise with InputError.
PatchPlan make_patch_plan(const VulnerabilityGraph& g, const VertexCover& cover,
                          const DualGraph& d);

}  // namespace vulncover
