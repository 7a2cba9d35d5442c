#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hwp {

struct IdentityResult {
    std::string name;        // stable kebab-case identity id
    int d = 0;               // dimension the check ran at
    double max_deviation = 0.0;
    double tolerance = 0.0;  // boolean checks use deviation 0/1 against tolerance 0
    bool pass = false;
    std::string detail;      // optional payload, e.g. series sizes
};

struct SuiteReport {
    std::string suite;  // operators | group | frames | ww
    std::vector<IdentityResult> identities;
    bool all_pass() const;
};

struct VerifyOptions {
    std::vector<int> dims = {3, 5, 7};
    std::vector<int> group_dims = {3, 5};  // exhaustive closure is kept at desk scale
    std::uint64_t seed = 7;
    bool flip_unified_fourier_sign = false;  // fault hook: breaks "unified-fourier"
};

SuiteReport verify_operators(const VerifyOptions& options);
SuiteReport verify_group(const VerifyOptions& options);
SuiteReport verify_frames(const VerifyOptions& options);
SuiteReport verify_ww(const VerifyOptions& options);
std::vector<SuiteReport> verify_all(const VerifyOptions& options);

bool all_pass(const std::vector<SuiteReport>& reports);

// Every identity name the suites can emit, sorted; embedded in the report.
std::vector<std::string> identity_manifest();

// Full JSON report: suites, per-identity results, manifest, overall flag.
std::string verify_report_json(const std::vector<SuiteReport>& reports);

}  // namespace hwp
