#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace torusemb {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The built-in acceptance checks: exhaustive exclusion sweeps, the standard
// constructions, the invariance suite, the oracle comparisons, and the
// witness round trips. The same checks back the CLI selftest command and the
// acceptance test binary.
std::size_t acceptance_check_count();
const char* acceptance_check_name(std::size_t index);
CheckResult run_acceptance_check(std::size_t index);
std::vector<CheckResult> run_acceptance_suite();

}  // namespace torusemb
