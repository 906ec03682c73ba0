#pragma once

#include <string>
#include <vector>

namespace lt {

enum class CheckCmp { equal, at_most, at_least };

struct CheckResult {
    std::string id;
    std::string description;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool relative = false; // tolerance relative to |expected|
    CheckCmp cmp = CheckCmp::equal;
    bool pass = false;
    double runtime_s = 0.0;
    double budget_s = 0.0;       // 0 = no runtime budget attached
    std::string provenance;      // literature / derived / conjectured / exact
};

// The acceptance catalog: recomputes every pinned number and compares at the
// pinned tolerance. quick=true skips the three slow suites (ratio catalog,
// coupling convergence, two-bump).
std::vector<CheckResult> run_acceptance(bool quick = false);

bool all_passed(const std::vector<CheckResult>& rows);

} // namespace lt
