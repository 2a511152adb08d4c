#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mouldlab {

struct VerifyOptions {
    std::uint64_t seed = 1;
    // Overrides every per-check degree cap (hard limits still apply).
    std::optional<int> max_degree;
};

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool passed() const;
};

// Suite names, in run order: operad, anticyclic, dend, residue, tamari,
// tridend, ncp-counts, ncp-operad, preservation, derivation, gallery,
// forgetful.
const std::vector<std::string> &suite_names();
SuiteReport run_suite(const std::string &name, const VerifyOptions &opts);

// Command-line groups (operad, anticyclic, dend, tridend, ncp, derivation,
// ari, gallery, all) mapped to suites; empty for an unknown group.
std::vector<std::string> suites_in_group(const std::string &group);

std::string report_text(const std::vector<SuiteReport> &reports);
std::string report_json(const std::vector<SuiteReport> &reports);

} // namespace mouldlab
