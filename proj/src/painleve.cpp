#include "monoword/painleve.hpp"

#include "monoword/ode.hpp"
#include "monoword/series.hpp"
#include "monoword/symbol.hpp"
#include "monoword/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace monoword {

WState to_w_state(const SigmaState& s)
{
    const double m = s.k + s.n;
    if (m == 0.0)
        throw std::domain_error("w is undefined when k + n = 0");
    return {s.t, s.t - s.sigma / m, 1.0 - s.d1 / m, -s.d2 / m, s.n, s.k};
}

SigmaState to_sigma_state(const WState& w)
{
    const double m = w.k + w.n;
    return {w.t, m * (w.t - w.w), m * (1.0 - w.d1), -m * w.d2, w.n, w.k};
}

namespace {

struct SigmaTerms {
    double lhs;  // (t s'')^2
    double b2;   // B^2
    double p;    // 4 s'^2 (s'-k)(s'-k-n)
};

SigmaTerms sigma_terms(const SigmaState& s)
{
    const double n = s.n;
    const double k = s.k;
    const double u = s.d1;
    const double b = s.sigma - s.t * u - 2.0 * u * u + (2.0 * k + n) * u;
    const double ts = s.t * s.d2;
    return {ts * ts, b * b, 4.0 * u * u * (u - k) * (u - k - n)};
}

struct FirstIntegralTerms {
    double lhs;
    double rhs;
    double scale;
};

FirstIntegralTerms first_integral_terms(const WState& s)
{
    const double t = s.t;
    const double w = s.w;
    const double u = s.d1;
    const double m = s.k + s.n;
    const double n = s.n;
    const double k = s.k;
    const double a = -4.0 * m * t * u * u * u;
    const double b = (4.0 * m * w + t * t + 2.0 * (2.0 * k + 3.0 * n) * t + n * n) * u * u;
    const double c = -(2.0 * (t + 2.0 * k + 3.0 * n) * w + 2.0 * n * t + 2.0 * n * n) * u;
    const double d = (w + n) * (w + n);
    const double lhs = t * t * s.d2 * s.d2;
    const double scale = std::max({1.0, std::abs(lhs), std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    return {lhs, a + b + c + d, scale};
}

}  // namespace

double sigma_form_residual(const SigmaState& s)
{
    const auto x = sigma_terms(s);
    return x.lhs - x.b2 + x.p;
}

double sigma_form_residual_scaled(const SigmaState& s)
{
    const auto x = sigma_terms(s);
    const double scale = std::max({1.0, std::abs(x.lhs), x.b2, std::abs(x.p)});
    return (x.lhs - x.b2 + x.p) / scale;
}

double first_integral_residual(const WState& w)
{
    const auto x = first_integral_terms(w);
    return x.lhs - x.rhs;
}

double first_integral_residual_scaled(const WState& w)
{
    const auto x = first_integral_terms(w);
    return (x.lhs - x.rhs) / x.scale;
}

double de3_rhs(const WState& s)
{
    const double t = s.t;
    const double w = s.w;
    const double u = s.d1;
    const double v = s.d2;
    const double n = s.n;
    const double m = s.k + s.n;
    if (u == 0.0)
        throw PoleError("third-order equation is singular: factor 1/w' with w' = 0");
    if (u == 1.0)
        throw PoleError("third-order equation is singular: factor 1/(w' - 1) with w' = 1");
    const double t2 = t * t;
    return 0.5 * (1.0 / u + 1.0 / (u - 1.0)) * v * v - v / t + 2.0 * m * u / t - 2.0 * m * u * u / t
           + (t + n) / (2.0 * t2) * (n - t + 2.0 * w) - (n + w) * (n + w) / (2.0 * t2 * u)
           - (t - w) * (t - w) / (2.0 * t2 * (u - 1.0));
}

double de3_residual(const WState& w, double w3) { return w3 - de3_rhs(w); }

double sigma_third_derivative(const SigmaState& s)
{
    const double n = s.n;
    const double k = s.k;
    const double u = s.d1;
    const double t = s.t;
    const double b = s.sigma - t * u - 2.0 * u * u + (2.0 * k + n) * u;
    const double dp = 4.0 * (2.0 * u * (u - k) * (u - k - n) + u * u * (2.0 * u - 2.0 * k - n));
    return (b * (2.0 * k + n - t - 4.0 * u) - 0.5 * dp - t * s.d2) / (t * t);
}

double boundary_coefficient(int n, double k)
{
    double fact = 1.0;
    for (int i = 2; i <= n + 1; ++i)
        fact *= i;
    return k / fact * generalized_binomial(n + k, n);
}

SigmaState toeplitz_sigma_state(int n, double k, double t)
{
    const double m = k + n;
    if (m == 0.0) {
        // sigma' = (k+n)(1 - phi) vanishes identically.
        return {t, sigma_from_toeplitz(n, k, t), 0.0, 0.0, n, k};
    }
    const auto jet = ut_plus_jet(n, k, t);
    return to_sigma_state({t, jet.w, jet.d1, jet.d2, n, k});
}

namespace {

using State = std::array<double, 4>;

double horner(const std::vector<double>& c, double x)
{
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::vector<double> derivative(const std::vector<double>& c)
{
    std::vector<double> d;
    for (std::size_t j = 1; j < c.size(); ++j)
        d.push_back(static_cast<double>(j) * c[j]);
    return d;
}

// int_0^x sum c_j t^{j-1} dt.
double head_integral(const std::vector<double>& c, double x)
{
    double acc = 0.0;
    for (std::size_t j = c.size(); j-- > 1;)
        acc = acc * x + c[j] / static_cast<double>(j);
    return acc * x;
}

double quintic_hermite(double y0, double d0, double s0, double y1, double d1, double s1, double h, double s)
{
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double s4 = s3 * s;
    const double s5 = s4 * s;
    const double h0 = 1.0 - 10.0 * s3 + 15.0 * s4 - 6.0 * s5;
    const double h1 = s - 6.0 * s3 + 8.0 * s4 - 3.0 * s5;
    const double h2 = 0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5;
    const double h3 = 0.5 * s3 - s4 + 0.5 * s5;
    const double h4 = -4.0 * s3 + 7.0 * s4 - 3.0 * s5;
    const double h5 = 10.0 * s3 - 15.0 * s4 + 6.0 * s5;
    return y0 * h0 + h * d0 * h1 + h * h * s0 * h2 + h * h * s1 * h3 + h * d1 * h4 + y1 * h5;
}

double cubic_hermite(double y0, double d0, double y1, double d1, double h, double s)
{
    const double s2 = s * s;
    const double s3 = s2 * s;
    return y0 * (2 * s3 - 3 * s2 + 1) + h * d0 * (s3 - 2 * s2 + s) + y1 * (-2 * s3 + 3 * s2) + h * d1 * (s3 - s2);
}

}  // namespace

SigmaState SigmaTrajectory::state_at(double t_abs) const
{
    const double tau = direction * t_abs;
    SigmaState s{tau, 0.0, 0.0, 0.0, n, k_eff};
    if (points.empty() || t_abs <= t_start) {
        const auto d1c = derivative(head);
        s.sigma = horner(head, tau);
        s.d1 = horner(d1c, tau);
        s.d2 = horner(derivative(d1c), tau);
        return s;
    }
    const double last = std::abs(points.back().t);
    if (t_abs > last * (1.0 + 1e-12))
        throw std::out_of_range("time lies beyond the integrated trajectory");
    auto it = std::lower_bound(points.begin(), points.end(), t_abs,
                               [](const TrajectoryPoint& p, double x) { return std::abs(p.t) < x; });
    if (it == points.end())
        it = points.end() - 1;
    if (std::abs(it->t) == t_abs || it == points.begin()) {
        s.sigma = it->sigma;
        s.d1 = it->d1;
        s.d2 = it->d2;
        return s;
    }
    const auto& a = *(it - 1);
    const auto& b = *it;
    const double h = b.t - a.t;
    const double x = (tau - a.t) / h;
    const double a3 = sigma_third_derivative({a.t, a.sigma, a.d1, a.d2, n, k_eff});
    const double b3 = sigma_third_derivative({b.t, b.sigma, b.d1, b.d2, n, k_eff});
    s.sigma = quintic_hermite(a.sigma, a.d1, a.d2, b.sigma, b.d1, b.d2, h, x);
    s.d1 = quintic_hermite(a.d1, a.d2, a3, b.d1, b.d2, b3, h, x);
    s.d2 = cubic_hermite(a.d2, a3, b.d2, b3, h, x);
    return s;
}

SigmaTrajectory integrate_sigma(int n, int k, double t_end, const SigmaOptions& options, Statistic which)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("integrate_sigma needs n >= 1 and k >= 1");
    if (!(options.tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    SigmaTrajectory tr;
    tr.n = n;
    tr.k = k;
    tr.which = which;
    tr.tol = options.tol;
    tr.seed = options.seed;
    const bool decreasing = which == Statistic::StrictlyDecreasing;
    tr.k_eff = decreasing ? -k : k;
    tr.direction = decreasing ? -1.0 : 1.0;

    const int order = std::max(options.series_order, n + 3);
    const auto series = decreasing ? sigma_series_decreasing(n, k, order) : sigma_series(n, k, order);
    std::vector<double> full(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= order; ++j)
        full[static_cast<std::size_t>(j)] = series[j].get_d() * (decreasing && j % 2 ? -1.0 : 1.0);

    double ts = options.t_start;
    if (options.seed == SeedMode::ExactSeries) {
        tr.head = full;
        if (ts <= 0.0) {
            ts = 1e-2;
            // Shrink until the last two retained terms are negligible.
            for (int guard = 0; guard < 60; ++guard) {
                const double tau = tr.direction * ts;
                const double tail = std::abs(full[static_cast<std::size_t>(order)] * std::pow(ts, order))
                                    + std::abs(full[static_cast<std::size_t>(order - 1)] * std::pow(ts, order - 1));
                if (tail <= 1e-17 * std::abs(horner(full, tau)) || tail == 0.0)
                    break;
                ts *= 0.5;
            }
        }
    } else {
        tr.head.assign(static_cast<std::size_t>(n) + 2, 0.0);
        tr.head[static_cast<std::size_t>(n) + 1] = boundary_coefficient(n, tr.k_eff);
        if (ts <= 0.0) {
            // Relative seed error is about |c_{n+2}/c_{n+1}| t; keep it near sqrt(tol).
            const double lead = std::abs(full[static_cast<std::size_t>(n) + 1]);
            const double next = std::abs(full[static_cast<std::size_t>(n) + 2]);
            const double ratio = lead > 0.0 ? next / lead : 0.0;
            ts = ratio > 0.0 ? std::min(1e-2, std::sqrt(options.tol) / ratio) : 1e-2;
        }
    }
    if (!(t_end > 0.0))
        throw std::invalid_argument("t_end must be positive");
    ts = std::min(ts, 0.5 * t_end);
    tr.t_start = ts;

    const double dir = tr.direction;
    const double keff = tr.k_eff;
    auto seed_state = [&](double tau) {
        const auto d1c = derivative(tr.head);
        return State{horner(tr.head, tau), horner(d1c, tau), horner(derivative(d1c), tau),
                     head_integral(tr.head, tau)};
    };
    auto rhs = [n, keff](double tau, const State& y) {
        const SigmaState s{tau, y[0], y[1], y[2], n, keff};
        return State{y[1], y[2], sigma_third_derivative(s), y[0] / tau};
    };

    OdeOptions ode;
    ode.rtol = options.tol;
    ode.atol = options.tol * 1e-6;
    ode.min_step = 1e-15;
    DormandPrince<4> solver(dir * ts, seed_state(dir * ts), ode);

    auto record = [&](double tau, const State& y) {
        tr.points.push_back({tau, y[0], y[1], y[2], y[3]});
        const SigmaState s{tau, y[0], y[1], y[2], n, keff};
        tr.max_sigma_residual = std::max(tr.max_sigma_residual, std::abs(sigma_form_residual_scaled(s)));
        if (keff + n != 0.0)
            tr.max_first_integral_residual =
                std::max(tr.max_first_integral_residual, std::abs(first_integral_residual_scaled(to_w_state(s))));
        if (!decreasing && !(y[0] > 0.0))
            tr.sigma_positive = false;
    };
    auto splice = [&](double tau) {
        const auto s = toeplitz_sigma_state(n, keff, tau);
        const double integral = solver.state()[3];
        solver.reset_state(State{s.sigma, s.d1, s.d2, integral});
        tr.splices.push_back(std::abs(tau));
        tr.points.back() = {tau, s.sigma, s.d1, s.d2, integral};
    };
    record(dir * ts, solver.state());

    std::vector<double> stops;
    for (double x : options.sample_times)
        if (x > ts && x < t_end)
            stops.push_back(x);
    if (options.force_restart_at && *options.force_restart_at > ts && *options.force_restart_at < t_end)
        stops.push_back(*options.force_restart_at);
    stops.push_back(t_end);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

    for (double stop : stops) {
        bool degenerate = false;
        solver.advance_to(dir * stop, rhs, [&](double tau, const State& y) {
            const double prev = tr.points.back().d2;
            record(tau, y);
            if (!degenerate && prev != 0.0 && y[2] != 0.0 && (prev > 0.0) != (y[2] > 0.0)) {
                if (options.on_degenerate == DegeneratePolicy::Throw) {
                    std::ostringstream msg;
                    msg << "sigma'' changed sign near t = " << std::abs(tau) << " (n = " << n << ", k = " << k
                        << "); restart from the Toeplitz state or use the restart policy";
                    throw DegenerateSigmaError(msg.str(), std::abs(tau));
                }
                degenerate = true;
                splice(tau);
            }
        });
        if (options.force_restart_at && stop == *options.force_restart_at)
            splice(dir * stop);
    }
    tr.steps = solver.accepted_steps();
    return tr;
}

double determinant_from_sigma(const SigmaTrajectory& tr, double t)
{
    if (t < 0.0)
        throw std::invalid_argument("determinant_from_sigma takes |t|");
    if (t == 0.0)
        return 1.0;
    const double tau = tr.direction * t;
    if (t <= tr.t_start || tr.points.empty())
        return std::exp(-head_integral(tr.head, tau));
    const auto& pts = tr.points;
    if (t > std::abs(pts.back().t) * (1.0 + 1e-12))
        throw std::out_of_range("time lies beyond the integrated trajectory");
    auto it = std::lower_bound(pts.begin(), pts.end(), t,
                               [](const TrajectoryPoint& p, double x) { return std::abs(p.t) < x; });
    if (it == pts.end())
        it = pts.end() - 1;
    if (std::abs(it->t) == t || it == pts.begin())
        return std::exp(-it->integral);
    const auto& a = *(it - 1);
    const auto& b = *it;
    // I' = sigma/t, I'' = (t sigma' - sigma)/t^2.
    const double da = a.sigma / a.t;
    const double db = b.sigma / b.t;
    const double sa = (a.t * a.d1 - a.sigma) / (a.t * a.t);
    const double sb = (b.t * b.d1 - b.sigma) / (b.t * b.t);
    const double h = b.t - a.t;
    const double x = (tau - a.t) / h;
    return std::exp(-quintic_hermite(a.integral, da, sa, b.integral, db, sb, h, x));
}

}  // namespace monoword
