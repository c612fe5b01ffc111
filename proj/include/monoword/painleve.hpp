#pragma once

// Painleve V in sigma form with parameters nu0 = nu1 = 0, nu2 = k, nu3 = k + n:
//
//   (t s'')^2 = (s - t s' - 2 s'^2 + (2k+n) s')^2 - 4 s'^2 (s' - k)(s' - k - n),
//
// its first-integral form in w = t - s/(k+n), and the third-order equation for w.
// Integration uses the explicit third-order equation obtained by differentiating
// the sigma form, seeded near t = 0 from the exact power series of sigma.
//
// sigma = -t d/dt log(e^{-kt} D_n(t)) for the I symbol, so e^{-kt} D_n(t) is
// exp(-int_0^t sigma/t'). The D symbol is reached with (k, t) -> (-k, -t).

#include "monoword/combinatorics.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace monoword {

struct SigmaState {
    double t = 0.0;
    double sigma = 0.0;
    double d1 = 0.0;  // sigma'
    double d2 = 0.0;  // sigma''
    int n = 1;
    double k = 1.0;
};

struct WState {
    double t = 0.0;
    double w = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    int n = 1;
    double k = 1.0;
};

class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DegenerateSigmaError : public std::runtime_error {
public:
    DegenerateSigmaError(const std::string& what, double at) : std::runtime_error(what), t(at) {}
    double t;
};

WState to_w_state(const SigmaState& s);
SigmaState to_sigma_state(const WState& w);

// Signed residual of the sigma form; the scaled variant divides by the
// largest of 1 and the three term magnitudes.
double sigma_form_residual(const SigmaState& s);
double sigma_form_residual_scaled(const SigmaState& s);

double first_integral_residual(const WState& w);
double first_integral_residual_scaled(const WState& w);

// Right-hand side of the third-order equation; throws PoleError at w' = 0 or 1.
double de3_rhs(const WState& w);
double de3_residual(const WState& w, double w3);

// sigma''' from the differentiated sigma form (t > 0).
double sigma_third_derivative(const SigmaState& s);

// k/(n+1)! * C(n+k, n), the coefficient of t^{n+1} in sigma. Real k allowed.
double boundary_coefficient(int n, double k);

// (sigma, sigma', sigma'') from the Toeplitz inner products at real (k, t), I symbol.
SigmaState toeplitz_sigma_state(int n, double k, double t);

enum class SeedMode { ExactSeries, LeadingTerm };
enum class DegeneratePolicy { Restart, Throw };

struct SigmaOptions {
    double tol = 1e-10;
    double t_start = 0.0;  // 0 chooses automatically
    SeedMode seed = SeedMode::ExactSeries;
    int series_order = 40;
    DegeneratePolicy on_degenerate = DegeneratePolicy::Restart;
    std::optional<double> force_restart_at;  // test hook: splice in Toeplitz state here
    std::vector<double> sample_times;        // landed on exactly
};

struct TrajectoryPoint {
    double t = 0.0;  // integration variable (negative along the D route)
    double sigma = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double integral = 0.0;  // int_0^t sigma/t'
};

struct SigmaTrajectory {
    int n = 1;
    int k = 1;
    Statistic which = Statistic::WeaklyIncreasing;
    double k_eff = 1.0;      // k for I, -k for D
    double direction = 1.0;  // sign of the integration variable
    double t_start = 0.0;    // |t| where integration begins
    double tol = 0.0;
    SeedMode seed = SeedMode::ExactSeries;
    std::vector<double> head;  // seed series coefficients, used on (0, t_start]
    std::vector<TrajectoryPoint> points;
    std::vector<double> splices;  // |t| values of Toeplitz restarts
    double max_sigma_residual = 0.0;           // scaled
    double max_first_integral_residual = 0.0;  // scaled
    bool sigma_positive = true;
    std::size_t steps = 0;

    // Interpolated state at |t|, in the P_V variables (t carries the route sign).
    SigmaState state_at(double t) const;
};

// Integrates to |t| = t_end; `which` selects the I or D symbol.
SigmaTrajectory integrate_sigma(int n, int k, double t_end, const SigmaOptions& options = {},
                                Statistic which = Statistic::WeaklyIncreasing);

// e^{-kt} D_n(t) for the trajectory's symbol, 0 <= t <= t_end.
double determinant_from_sigma(const SigmaTrajectory& trajectory, double t);

}  // namespace monoword
