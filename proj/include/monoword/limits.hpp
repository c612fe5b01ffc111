#pragma once

// Limit laws: the largest eigenvalue of k x k traceless GUE (F0) and GUE (F)
// with weight e^{-sum x_j^2}, convergence of the exact word distributions to F0,
// and the GUE edge law F2 through the Hastings-McLeod solution of Painleve II.
//
//   F0(s, k) = gamma_k * int_{Z_s} e^{-sum x^2} Delta(x)^2 dsigma,
//
// Z_s = {sum x_j = 0, max x_j <= s} with hyperplane Lebesgue measure dsigma,
// which in the coordinates x_1..x_{k-1} is sqrt(k) dx_1..dx_{k-1}.
//
// The Hastings-McLeod solution is unstable when integrated toward -inf: any
// admixture of the growing Airy solution Bi is amplified, so the integration
// runs at a tight tolerance from s0 = 6 where q and Ai agree to O(Ai^3).

#include "monoword/combinatorics.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace monoword {

class PrecisionNotReached : public std::runtime_error {
public:
    PrecisionNotReached(const std::string& what, double value_, double error_)
        : std::runtime_error(what), value(value_), error(error_)
    {
    }
    double value;
    double error;
};

// 1/gamma_k = 1! 2! ... k! (2 pi)^{(k-1)/2} 2^{-(k^2-1)/2}.
double log_gamma_k(int k);
double gamma_k(int k);

enum class F0Method { Quadrature, MonteCarlo };

inline constexpr int kMaxQuadratureK = 4;

struct Estimate {
    double value = 0.0;
    double error = 0.0;  // standard error; 0 for deterministic routes
};

struct MonteCarloOptions {
    std::uint64_t seed = 20240521;
    std::uint64_t samples = 400'000;
    int strata = 64;
    double target_error = std::numeric_limits<double>::infinity();
};

// Nested Gauss-Legendre over x_1..x_{k-1}; k in [2, 4]. s = +inf is allowed.
double f0_quadrature(double s, int k);
// Gaussian on the hyperplane reweighted by gamma_k pi^{(k-1)/2} Delta^2,
// with the Box-Muller radius of the first pair stratified.
Estimate f0_montecarlo(double s, int k, const MonteCarloOptions& options = {});
Estimate f0(double s, int k, F0Method method = F0Method::Quadrature, const MonteCarloOptions& options = {});

// erf(sqrt2 s) - (2 sqrt2/sqrt pi) s e^{-2 s^2} for s >= 0, else 0.
double f0_closed_form_k2(double s);

// F0(s sqrt(k/2), k), the law of the scaled limiting variable of the word statistic.
double ell_k_cdf(double s, int k);

enum class GueRoute { Convolution, Direct };

// GUE largest-eigenvalue CDF, k in [2, 4] for both routes.
double gue_F(double s, int k, GueRoute route = GueRoute::Convolution);

struct ConvergenceRow {
    int N = 0;
    double sup_error = 0.0;
    double argmax_s = 0.0;
};

struct ConvergenceReport {
    int k = 0;
    double s_min = 0.0;
    double s_max = 0.0;
    std::vector<ConvergenceRow> rows;
    bool strictly_decreasing = true;
};

// Exact tableaux-route Prob((l^I - N/k)/sqrt(2N/k) <= s) against F0(s, k).
// The exact side is a step function, so the sup over s in [s_min, s_max] is
// taken over every lattice point s_n = (n - N/k)/sqrt(2N/k) with both the value
// and the left limit there.
ConvergenceReport theorem4_convergence(int k, const std::vector<int>& N_list, double s_min = -3.0,
                                       double s_max = 3.0);

struct F2Point {
    double s = 0.0;
    double F2 = 0.0;
    double q = 0.0;
    double q_prime = 0.0;
    double invariant_residual = 0.0;  // q'^2 - s q^2 - q^4 - int_s^inf q^2
};

struct F2Options {
    double tol = 1e-12;
    double s0 = 6.0;
    double s_min = -8.0;
};

// F2 on an increasing grid within [s_min, s0].
std::vector<F2Point> f2(const std::vector<double>& s_grid, const F2Options& options = {});

struct FklimRow {
    int k = 0;
    double s = 0.0;
    double f0 = 0.0;
    double f0_error = 0.0;
    double f2 = 0.0;
    double error = 0.0;
};

struct FklimReport {
    std::vector<FklimRow> rows;
    std::vector<std::pair<int, double>> sup_error;  // per k
};

// F0(sqrt(2k) + s/(sqrt2 k^{1/6}), k) against F2(s). Quadrature for k <= 4,
// Monte Carlo beyond.
FklimReport fklim_check(const std::vector<int>& k_list, const std::vector<double>& s_grid,
                        const MonteCarloOptions& mc = {});

}  // namespace monoword
