#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elfkit/logical_circuit.hpp"
#include "elfkit/validation.hpp"

namespace elfkit {

// vrf-curve: for every (scheme, sigma, mu) grid point, one row for the
// optimized angles (ELF) and one for the all-pi/2 baseline (CLF).
// Columns: scheme,variant,L,sigma,mu,V,epv,x_star. Rows are sorted by
// (scheme, variant, sigma, mu); x_star is semicolon-joined, empty for CLF.
struct VrfCurveConfig {
    std::vector<Scheme> schemes{Scheme::AF, Scheme::AB};
    int L = 1;
    std::vector<double> sigmas{0.5, 0.2, 0.1, 0.05};
    int mu_points = 201;  // interior grid i*pi/(mu_points+1)
    int restarts = 4;
    std::uint64_t seed = 0;
    double fidelity = 1.0;
    std::string out_path;
};

void run_vrf_curve(const VrfCurveConfig& config);

// bias-curve: direct circuit evaluation against the series route on a theta
// grid. Columns: theta,lambda_direct,lambda_series,abs_diff, with a final
// summary row carrying the maximum discrepancy.
struct BiasCurveConfig {
    Scheme scheme = Scheme::AF;
    int L = 1;
    std::vector<double> x;  // empty selects the all-pi/2 angles
    int theta_points = 257;
    double fidelity = 1.0;
    std::string out_path;
};

void run_bias_curve(const BiasCurveConfig& config);

// validate: runs the invariant suites; returns the process exit code
// (0 pass, 1 failure) and optionally writes a JSON report.
struct ValidateConfig {
    ValidationLevel level = ValidationLevel::Fast;
    std::string json_path;  // empty: no JSON output
};

int run_validate(const ValidateConfig& config);

// argv-level entry point used by the binary; exposed so the exit-code
// contract is testable in-process. Returns 0 ok, 1 validation failure,
// 2 usage error.
int cli_main(int argc, const char* const* argv);

}  // namespace elfkit
