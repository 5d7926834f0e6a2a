#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ladderamp::tools {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
};

struct VerifyReport {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool all_pass = false;

    nlohmann::json to_json() const;
};

// Runs the invariant battery at the configured ladder size plus the fixed
// reference fixture. Deterministic for a given (n, seed).
VerifyReport run_verify_battery(int n, std::uint64_t seed);

}  // namespace ladderamp::tools
