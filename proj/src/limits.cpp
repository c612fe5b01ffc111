#include "monoword/limits.hpp"

#include "monoword/airy.hpp"
#include "monoword/ode.hpp"
#include "monoword/parallel.hpp"
#include "monoword/quadrature.hpp"
#include "monoword/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace monoword {

namespace {

constexpr double kCut = 6.5;  // e^{-x^2} below 5e-19 beyond this
constexpr int kPanelNodes = 16;
constexpr double kPanelWidth = 1.0;

void require_k(int k, int max_k)
{
    if (k < 2)
        throw std::invalid_argument("traceless ensemble needs k >= 2");
    if (k > max_k)
        throw std::invalid_argument("quadrature refuses k = " + std::to_string(k) + "; budget allows k <= "
                                    + std::to_string(max_k) + ", use Monte Carlo");
}

const QuadratureRule& reference_rule()
{
    static const QuadratureRule rule = gauss_legendre(kPanelNodes);
    return rule;
}

// Composite rule over [a, b] with panels of at most kPanelWidth.
template <class F>
double integrate_interval(double a, double b, F&& f)
{
    if (!(b > a))
        return 0.0;
    const auto& ref = reference_rule();
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / kPanelWidth)));
    const double width = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * width;
        const double half = 0.5 * width;
        for (std::size_t i = 0; i < ref.nodes.size(); ++i)
            sum += half * ref.weights[i] * f(mid + half * ref.nodes[i]);
    }
    return sum;
}

double vandermonde_squared(const double* x, int k)
{
    double v = 1.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            v *= x[j] - x[i];
    return v * v;
}

// Integral over x_level..x_{k-2} of the traceless integrand with x_{k-1} = -sum.
double nested_traceless(int level, int k, double s, double partial, std::array<double, 8>& x)
{
    if (level == k - 1) {
        x[static_cast<std::size_t>(k - 1)] = -partial;
        double sq = 0.0;
        for (int i = 0; i < k; ++i)
            sq += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
        return std::exp(-sq) * vandermonde_squared(x.data(), k);
    }
    // The remaining free variables are each <= s, so x_{k-1} <= s forces
    // partial + x_level >= -(k - 1 - level) s.
    const double lo = std::max(-kCut, -(k - 1 - level) * s - partial);
    const double hi = std::min(s, kCut);
    return integrate_interval(lo, hi, [&](double v) {
        x[static_cast<std::size_t>(level)] = v;
        return nested_traceless(level + 1, k, s, partial + v, x);
    });
}

double nested_box(int level, int k, double s, std::array<double, 8>& x)
{
    if (level == k) {
        double sq = 0.0;
        for (int i = 0; i < k; ++i)
            sq += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
        return std::exp(-sq) * vandermonde_squared(x.data(), k);
    }
    return integrate_interval(-kCut, std::min(s, kCut), [&](double v) {
        x[static_cast<std::size_t>(level)] = v;
        return nested_box(level + 1, k, s, x);
    });
}

}  // namespace

double log_gamma_k(int k)
{
    if (k < 1)
        throw std::invalid_argument("gamma_k needs k >= 1");
    double acc = 0.0;
    for (int j = 1; j <= k; ++j)
        acc += std::lgamma(j + 1.0);
    acc += 0.5 * (k - 1) * std::log(2.0 * std::numbers::pi);
    acc -= 0.5 * (double(k) * k - 1.0) * std::log(2.0);
    return -acc;
}

double gamma_k(int k) { return std::exp(log_gamma_k(k)); }

double f0_closed_form_k2(double s)
{
    if (s <= 0.0)
        return 0.0;
    return std::erf(std::numbers::sqrt2 * s)
           - 2.0 * std::numbers::sqrt2 / std::sqrt(std::numbers::pi) * s * std::exp(-2.0 * s * s);
}

double f0_quadrature(double s, int k)
{
    require_k(k, kMaxQuadratureK);
    if (s <= 0.0)
        return 0.0;
    std::array<double, 8> x{};
    const double integral = nested_traceless(0, k, std::min(s, kCut), 0.0, x);
    return gamma_k(k) * std::sqrt(double(k)) * integral;
}

Estimate f0_montecarlo(double s, int k, const MonteCarloOptions& options)
{
    if (k < 2)
        throw std::invalid_argument("traceless ensemble needs k >= 2");
    if (k > 8)
        throw std::invalid_argument("Monte Carlo route supports k <= 8");
    if (options.strata < 1 || options.samples < static_cast<std::uint64_t>(options.strata) * 2)
        throw std::invalid_argument("need at least two samples per stratum");
    // Under x ~ N(0, I/2) projected onto the hyperplane, the density is
    // e^{-|x|^2}/pi^{(k-1)/2} in dsigma, so F0 = gamma_k pi^{(k-1)/2} E[Delta^2 1{max <= s}].
    const double scale = std::exp(log_gamma_k(k) + 0.5 * (k - 1) * std::log(std::numbers::pi));
    const auto strata = static_cast<std::size_t>(options.strata);
    const std::uint64_t per = options.samples / strata;
    struct Moments {
        double mean = 0.0;
        double var = 0.0;
    };
    const auto parts = parallel_map<Moments>(strata, [&](std::size_t j) {
        CounterRng rng(options.seed, j);
        double sum = 0.0;
        double sum2 = 0.0;
        std::array<double, 8> x{};
        for (std::uint64_t i = 0; i < per; ++i) {
            // Radius of the first Box-Muller pair comes from stratum j.
            const double u1 = (static_cast<double>(j) + rng.uniform()) / static_cast<double>(strata);
            auto [a, b] = CounterRng::box_muller(u1, rng.uniform());
            x[0] = a;
            x[1] = b;
            for (int c = 2; c < k; c += 2) {
                auto [p, q] = CounterRng::box_muller(rng.uniform(), rng.uniform());
                x[static_cast<std::size_t>(c)] = p;
                if (c + 1 < k)
                    x[static_cast<std::size_t>(c + 1)] = q;
            }
            double mean = 0.0;
            for (int c = 0; c < k; ++c) {
                x[static_cast<std::size_t>(c)] *= std::numbers::sqrt2 / 2.0;
                mean += x[static_cast<std::size_t>(c)];
            }
            mean /= k;
            double mx = -INFINITY;
            for (int c = 0; c < k; ++c) {
                x[static_cast<std::size_t>(c)] -= mean;
                mx = std::max(mx, x[static_cast<std::size_t>(c)]);
            }
            const double v = mx <= s ? scale * vandermonde_squared(x.data(), k) : 0.0;
            sum += v;
            sum2 += v * v;
        }
        const double m = sum / static_cast<double>(per);
        const double var = std::max(0.0, sum2 / static_cast<double>(per) - m * m) / static_cast<double>(per - 1);
        return Moments{m, var};
    });
    Estimate e;
    double var = 0.0;
    for (const auto& p : parts) {
        e.value += p.mean / static_cast<double>(strata);
        var += p.var / static_cast<double>(strata * strata);
    }
    e.error = std::sqrt(var);
    if (e.error > options.target_error)
        throw PrecisionNotReached("Monte Carlo standard error " + std::to_string(e.error)
                                      + " exceeds the requested " + std::to_string(options.target_error),
                                  e.value, e.error);
    return e;
}

Estimate f0(double s, int k, F0Method method, const MonteCarloOptions& options)
{
    if (method == F0Method::Quadrature)
        return {f0_quadrature(s, k), 0.0};
    return f0_montecarlo(s, k, options);
}

double ell_k_cdf(double s, int k) { return f0_quadrature(s * std::sqrt(0.5 * k), k); }

double gue_F(double s, int k, GueRoute route)
{
    require_k(k, kMaxQuadratureK);
    if (route == GueRoute::Direct) {
        std::array<double, 8> x{};
        const double c = std::exp(log_gamma_k(k)) / std::sqrt(std::numbers::pi);
        return c * nested_box(0, k, s, x);
    }
    // sqrt(k/pi) int e^{-k y^2} F0(s - y) dy; F0 vanishes for y >= s.
    const double reach = kCut / std::sqrt(double(k));
    const double lo = std::max(-reach, s - 2.0 * kCut);
    const double hi = std::min(reach, s);
    return std::sqrt(k / std::numbers::pi)
           * integrate_interval(lo, hi, [&](double y) { return std::exp(-k * y * y) * f0_quadrature(s - y, k); });
}

ConvergenceReport theorem4_convergence(int k, const std::vector<int>& N_list, double s_min, double s_max)
{
    require_k(k, kMaxQuadratureK);
    if (!(s_max > s_min))
        throw std::invalid_argument("empty s window");
    ConvergenceReport report;
    report.k = k;
    report.s_min = s_min;
    report.s_max = s_max;
    auto limit = [k](double s) { return k == 2 ? f0_closed_form_k2(s) : f0_quadrature(s, k); };
    report.rows = parallel_map<ConvergenceRow>(N_list.size(), [&](std::size_t j) {
        const int N = N_list[j];
        if (N < 1)
            throw std::invalid_argument("convergence needs N >= 1");
        const auto table = distribution_table_via_tableaux(k, N, Statistic::WeaklyIncreasing);
        const double mean = double(N) / k;
        const double spread = std::sqrt(2.0 * N / k);
        ConvergenceRow row;
        row.N = N;
        auto consider = [&](double err, double s) {
            if (err > row.sup_error) {
                row.sup_error = err;
                row.argmax_s = s;
            }
        };
        const int n_lo = std::max(0, static_cast<int>(std::ceil(mean + s_min * spread)));
        const int n_hi = std::min(N, static_cast<int>(std::floor(mean + s_max * spread)));
        // Window edges, where the step function is flat on one side.
        for (double s : {s_min, s_max}) {
            const int n = static_cast<int>(std::floor(mean + s * spread + 1e-12));
            consider(std::abs(table.at(n).get_d() - limit(s)), s);
        }
        for (int n = n_lo; n <= n_hi; ++n) {
            const double s = (n - mean) / spread;
            const double f = limit(s);
            consider(std::abs(table.at(n).get_d() - f), s);
            consider(std::abs(table.at(n - 1).get_d() - f), s);
        }
        return row;
    });
    for (std::size_t j = 1; j < report.rows.size(); ++j)
        if (!(report.rows[j].sup_error < report.rows[j - 1].sup_error))
            report.strictly_decreasing = false;
    return report;
}

std::vector<F2Point> f2(const std::vector<double>& s_grid, const F2Options& options)
{
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        if (s_grid[i] < options.s_min || s_grid[i] > options.s0)
            throw std::invalid_argument("F2 grid must lie within [" + std::to_string(options.s_min) + ", "
                                        + std::to_string(options.s0) + "]");
        if (i > 0 && !(s_grid[i] > s_grid[i - 1]))
            throw std::invalid_argument("F2 grid must be strictly increasing");
    }
    const double s0 = options.s0;
    const auto ai = airy(s0);
    // y = (q, q', A, B) with A = int_s^inf q^2, B = int_s^inf x q^2.
    using State = std::array<double, 4>;
    const State seed{ai.ai, ai.ai_prime, ai.ai_prime * ai.ai_prime - s0 * ai.ai * ai.ai,
                     (s0 * ai.ai_prime * ai.ai_prime - s0 * s0 * ai.ai * ai.ai - ai.ai * ai.ai_prime) / 3.0};
    auto rhs = [](double s, const State& y) {
        return State{y[1], s * y[0] + 2.0 * y[0] * y[0] * y[0], -y[0] * y[0], -s * y[0] * y[0]};
    };
    OdeOptions ode;
    ode.rtol = options.tol;
    ode.atol = options.tol * 1e-6;
    DormandPrince<4> solver(s0, seed, ode);

    auto blowup = [&](double s, const State& y) {
        // Hastings-McLeod stays positive and below sqrt(-s/2) + 1 on this range.
        if (!(y[0] > 0.0) || y[0] > std::sqrt(std::max(0.0, -s / 2.0)) + 1.0)
            throw IntegrationError("Painleve II solution left the Hastings-McLeod branch near s = " + std::to_string(s)
                                   + "; seed from a larger s0");
    };

    std::vector<F2Point> out(s_grid.size());
    for (std::size_t idx = s_grid.size(); idx-- > 0;) {
        const double s = s_grid[idx];
        try {
            solver.advance_to(s, rhs, blowup);
        } catch (const IntegrationError& e) {
            throw IntegrationError(std::string(e.what()) + " (s0 = " + std::to_string(s0) + "; try a larger s0)");
        }
        const auto& y = solver.state();
        F2Point p;
        p.s = s;
        p.q = y[0];
        p.q_prime = y[1];
        p.F2 = std::exp(-(y[3] - s * y[2]));
        p.invariant_residual = y[1] * y[1] - s * y[0] * y[0] - y[0] * y[0] * y[0] * y[0] - y[2];
        out[idx] = p;
    }
    return out;
}

FklimReport fklim_check(const std::vector<int>& k_list, const std::vector<double>& s_grid, const MonteCarloOptions& mc)
{
    FklimReport report;
    const auto limit = f2(s_grid);
    for (int k : k_list) {
        if (k < 2)
            throw std::invalid_argument("fklim needs k >= 2");
        const auto rows = parallel_map<FklimRow>(s_grid.size(), [&](std::size_t i) {
            FklimRow row;
            row.k = k;
            row.s = s_grid[i];
            const double arg = std::sqrt(2.0 * k) + s_grid[i] / (std::numbers::sqrt2 * std::pow(k, 1.0 / 6.0));
            const auto est = k <= kMaxQuadratureK ? f0(arg, k) : f0(arg, k, F0Method::MonteCarlo, mc);
            row.f0 = est.value;
            row.f0_error = est.error;
            row.f2 = limit[i].F2;
            row.error = std::abs(row.f0 - row.f2);
            return row;
        });
        double sup = 0.0;
        for (const auto& r : rows)
            sup = std::max(sup, r.error);
        report.rows.insert(report.rows.end(), rows.begin(), rows.end());
        report.sup_error.emplace_back(k, sup);
    }
    return report;
}

}  // namespace monoword
