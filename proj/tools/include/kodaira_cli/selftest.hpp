#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kodaira::cli {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // first few only
    double seconds = 0;
};

const std::vector<std::string>& suite_names();

struct SelftestOptions {
    std::uint64_t seed = 0;
    // Flip one expectation so that the failure path can be exercised.
    bool inject_failure = false;
    std::vector<std::string> only;  // empty: every suite
};

// Throws std::invalid_argument for an unknown suite name.
std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);

}  // namespace kodaira::cli
