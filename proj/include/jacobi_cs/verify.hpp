#pragma once

// Invariant suites per module. Every check compares a closed form against an
// independent oracle (finite differences, series, quadrature, Monte Carlo or
// integration) and reports the measured deviation against its tolerance.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jacobi_cs/core.hpp"
#include "jacobi_cs/kernels.hpp"

namespace jacobi_cs {

struct VerifyConfig {
    ModelParams params = ModelParams::make(1.0, 1.0);
    TruncationOrder truncation{};
    double fd_step = 1e-4;
    double rk4_step = 1e-3;
    std::uint64_t seed = 0;
    int mc_samples = 1000000;
    int random_points = 100;
    /// Overrides keyed by check name, e.g. "geometry.metric_fd".
    std::map<std::string, double> tolerances;

    double tolerance(const std::string& check, double fallback) const;
};

struct CheckResult {
    std::string check;
    std::string paper_ref;  // identity being tested
    double deviation = 0;
    double tolerance = 0;
    bool pass = false;
};

/// algebra, bargmann, embedding, geodesics, geometry, group, kernels, quadrature.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite in name order for "all". Throws
/// InvalidParams for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace jacobi_cs
