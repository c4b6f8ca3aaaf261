#pragma once

#include <string>
#include <vector>

#include "delta/polynomial.hpp"

namespace delta {

struct ManifestOptions {
    std::string output_dir = ".";
    unsigned threads = 1;
    PrecisionPolicy policy;
    std::string constant_dir;
};

struct ClaimOutcome {
    std::string id;
    std::string op;
    bool achieved = false;
    bool unknown = false;  // an In/Out verdict was required but stayed Unknown
    std::string artifact;  // certificate path written (empty on schema-free ops)
    std::string detail;
};

// Executes the claims of a manifest and writes one deterministic certificate
// file per claim under output_dir. Schema violations throw MalformedInput.
// Certificates contain no timestamps or machine data: re-running a manifest
// with any thread count reproduces them byte for byte.
struct ManifestRunResult {
    std::vector<ClaimOutcome> outcomes;

    bool all_achieved() const;
    bool any_unknown() const;
    // 0 all achieved; 3 unknown verdicts blocked a claim; 1 other failures
    int exit_code() const;
};

ManifestRunResult run_manifest_json(const std::string& json_text, const ManifestOptions& opts);
ManifestRunResult run_manifest_file(const std::string& path, const ManifestOptions& opts);

}  // namespace delta
