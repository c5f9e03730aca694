#pragma once

// Seeded numerical property suites for the divergence, variance, continuity and
// bound modules. Shared by the command line and the acceptance checks.

#include <cstdint>
#include <string>
#include <vector>

namespace qeat {

struct SuiteInfo {
    std::string name;
    std::string description;
};

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // first few failure messages
    double seconds = 0.0;

    bool ok() const { return failed == 0 && passed > 0; }
};

const std::vector<SuiteInfo>& suite_catalog();

bool is_suite(const std::string& name);

/// Runs `trials` seeded instances of one suite. Unknown names throw DomainError.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials);

/// Runs the named suites in catalog order; an empty filter selects all of them.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& filter, std::uint64_t seed,
                                    int trials);

}  // namespace qeat
