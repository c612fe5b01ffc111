#pragma once

// Cross-route validation sweep: exact series against enumeration, the Toeplitz
// identity residuals on random points, Painleve and Fredholm routes against
// the Toeplitz determinant. The report is a pure function of the config.

#include <cstdint>
#include <string>
#include <vector>

namespace monoword::cli {

struct CrosscheckConfig {
    std::uint64_t seed = 1;
    int points = 100;
    double tol_identity = 1e-6;
    double tol_difference = 1e-4;
    double tol_theorem2 = 1e-6;
    double tol_theorem3 = 1e-6;
    std::string inject_fault;  // "", "determinant" or "series"
};

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct CrosscheckReport {
    CrosscheckConfig config;
    std::vector<CheckResult> checks;
    bool pass = true;
};

CrosscheckReport run_crosscheck(const CrosscheckConfig& config);
std::string report_json(const CrosscheckReport& report);

}  // namespace monoword::cli
