#pragma once

#include <string>
#include <vector>

namespace hs {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> results;
    double seconds = 0;
    bool pass() const;
};

struct CheckOptions {
    /// Largest |mu| for suites that range over profiles; 0 keeps each
    /// suite's own bound. For gap, degrees above 6 are report-only.
    int max_degree = 0;
};

/// score, commutation, inclusion-exclusion, gap, asymptotics, oracle,
/// orbifold, monotone.
const std::vector<std::string>& suite_names();

/// Throws InvalidQuery for an unknown suite.
SuiteReport run_suite(const std::string& name, const CheckOptions& options = {});

/// All profiles (weakly decreasing) with lo <= |mu| <= hi.
std::vector<std::vector<int>> profiles(int lo, int hi);

}  // namespace hs
