#include "monoword/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

namespace monoword {

ToeplitzContext::ToeplitzContext(int n, double k, double t, SymbolKind kind)
    : n_(n), k_(k), t_(t), kind_(kind)
{
    if (n < 0)
        throw std::invalid_argument("matrix size must be nonnegative");
    coeff_.resize(2 * static_cast<std::size_t>(n) + 3);
    for (int j = -n - 1; j <= n + 1; ++j)
        coeff_[static_cast<std::size_t>(j + n + 1)] = fourier_coefficient(kind, k, t, j);
    matrix_.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            matrix_(i, j) = fourier(i - j);
    if (n > 0) {
        lu_.compute(matrix_);
        rcond_ = lu_.rcond();
    }
}

Eigen::VectorXd ToeplitzContext::f_plus() const
{
    Eigen::VectorXd v(n_);
    for (int i = 0; i < n_; ++i)
        v(i) = fourier(i + 1);
    return v;
}

Eigen::VectorXd ToeplitzContext::f_minus() const
{
    Eigen::VectorXd v(n_);
    for (int i = 0; i < n_; ++i)
        v(i) = fourier(n_ - i);
    return v;
}

Eigen::VectorXd ToeplitzContext::ft_plus() const
{
    Eigen::VectorXd v(n_);
    for (int i = 0; i < n_; ++i)
        v(i) = fourier(-(i + 1));
    return v;
}

Eigen::VectorXd ToeplitzContext::ft_minus() const
{
    Eigen::VectorXd v(n_);
    for (int i = 0; i < n_; ++i)
        v(i) = fourier(-(n_ - i));
    return v;
}

void ToeplitzContext::require_nonsingular() const
{
    const double det = n_ == 0 ? 1.0 : lu_.determinant();
    if (!(rcond_ > 1e-15) || det == 0.0 || !std::isfinite(det))
        throw SingularMatrixError("Toeplitz matrix of size " + std::to_string(n_)
                                  + " is numerically singular (condition estimate "
                                  + std::to_string(1.0 / rcond_) + ")");
}

Eigen::VectorXd ToeplitzContext::solve(const Eigen::VectorXd& b) const
{
    require_nonsingular();
    return lu_.solve(b);
}

Eigen::VectorXd ToeplitzContext::solve_transposed(const Eigen::VectorXd& b) const
{
    require_nonsingular();
    return lu_.transpose().solve(b);
}

Eigen::MatrixXd ToeplitzContext::inverse() const
{
    require_nonsingular();
    return lu_.inverse();
}

double ToeplitzContext::determinant() const
{
    return n_ == 0 ? 1.0 : lu_.determinant();
}

double ToeplitzContext::log_abs_determinant() const
{
    double out = 0.0;
    for (int i = 0; i < n_; ++i)
        out += std::log(std::abs(lu_.matrixLU()(i, i)));
    return out;
}

DeterminantResult toeplitz_det(const ToeplitzContext& ctx)
{
    DeterminantResult out;
    if (ctx.size() == 0)
        return out;
    out.value = ctx.determinant();
    out.condition = 1.0 / ctx.rcond();
    if (!(ctx.rcond() > 1e-15) || out.value == 0.0 || !std::isfinite(out.value))
        throw SingularMatrixError("Toeplitz matrix of size " + std::to_string(ctx.size())
                                  + " is numerically singular (condition estimate "
                                  + std::to_string(out.condition) + ")");
    return out;
}

double toeplitz_det(int n, double k, double t, SymbolKind kind)
{
    return toeplitz_det(ToeplitzContext(n, k, t, kind)).value;
}

RecursionQuantities recursion_quantities(const ToeplitzContext& ctx)
{
    RecursionQuantities q;
    q.n = ctx.size();
    q.k = ctx.k();
    q.t = ctx.t();
    const int n = ctx.size();
    if (n == 0)
        return q;
    Eigen::VectorXd e0 = Eigen::VectorXd::Zero(n);
    e0(0) = 1.0;
    const Eigen::VectorXd x = ctx.solve(ctx.f_plus());
    const Eigen::VectorXd y = ctx.solve(e0);
    const Eigen::VectorXd z = ctx.solve_transposed(ctx.ft_plus());
    const Eigen::VectorXd w = ctx.solve_transposed(e0);
    q.u_plus = x(0);
    q.u_minus = x(n - 1);
    q.v_plus = y(0);
    q.v_minus = y(n - 1);
    q.ut_plus = z(0);
    q.ut_minus = z(n - 1);
    q.vt_minus = w(n - 1);
    q.phi = 1.0 - q.u_minus * q.ut_minus;
    return q;
}

RecursionQuantities recursion_quantities(int n, double k, double t, SymbolKind kind)
{
    return recursion_quantities(ToeplitzContext(n, k, t, kind));
}

namespace {

double scaled(double lhs, double rhs)
{
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// Residual of a sum of terms that should vanish, relative to the largest term.
double scaled_sum(std::initializer_list<double> terms)
{
    double sum = 0.0;
    double scale = 1.0;
    for (double v : terms) {
        sum += v;
        scale = std::max(scale, std::abs(v));
    }
    return std::abs(sum) / scale;
}

// Quantities at n - 1 for identities that reach one size down. At size 0 the
// (UV) relation -U-_0 = V-_1/V+_1 = 1 fixes U-_0 = Ut-_0 = -1, hence phi_0 = 0;
// the plus quantities are 0.
RecursionQuantities lower_neighbour(int n, double k, double t)
{
    if (n > 1)
        return recursion_quantities(n - 1, k, t, SymbolKind::I);
    RecursionQuantities q;
    q.k = k;
    q.t = t;
    q.u_minus = -1.0;
    q.ut_minus = -1.0;
    q.phi = 0.0;
    return q;
}

void require_positive_size(int n)
{
    if (n < 1)
        throw std::invalid_argument("identity residuals need n >= 1");
}

}  // namespace

ResidualMap universal_identity_residuals(int n, double k, double t, SymbolKind kind)
{
    require_positive_size(n);
    const ToeplitzContext c0(n, k, t, kind);
    const ToeplitzContext c1(n + 1, k, t, kind);
    const ToeplitzContext c2(n + 2, k, t, kind);
    const auto q0 = recursion_quantities(c0);
    const auto q1 = recursion_quantities(c1);
    const auto q2 = recursion_quantities(c2);
    const double d0 = toeplitz_det(c0).value;
    const double d1 = toeplitz_det(c1).value;

    const Eigen::VectorXd x = c0.solve(c0.f_plus());
    const double f0_inner = x.dot(c0.ft_plus());
    const double fn_inner = x.dot(c0.f_minus());
    const double ldmdp_lhs = c1.inverse()(1, n);

    ResidualMap r;
    r["UV"] = scaled(-q0.u_minus, q1.v_minus * d1 / d0);
    r["UV_ratio"] = scaled(-q0.u_minus, q1.v_minus / q1.v_plus);
    r["V_plus_ratio"] = scaled(q1.v_plus, d0 / d1);
    r["f0"] = scaled(c0.fourier(0) - f0_inner, 1.0 / q1.v_plus);
    r["V"] = scaled(q2.v_plus * q2.v_plus - q2.v_minus * q2.vt_minus, q1.v_plus * q2.v_plus);
    r["fn"] = scaled(c0.fourier(n + 1) - fn_inner, -(1.0 / q1.v_plus) * q2.v_minus / q2.v_plus);
    r["UV1"] = scaled(1.0 - q0.u_minus * q0.ut_minus, q0.v_plus / q1.v_plus);
    r["UU"] = scaled(q0.u_plus - q1.u_plus, q0.ut_minus * q1.u_minus);
    r["Ldmdp"] = scaled(ldmdp_lhs, q0.vt_minus + q0.ut_minus * q0.u_plus * q1.v_plus);
    return r;
}

ResidualMap nonuniversal_identity_residuals(int n, double k, double t)
{
    require_positive_size(n);
    const ToeplitzContext c0(n, k, t, SymbolKind::I);
    const auto qm = lower_neighbour(n, k, t);
    const auto q0 = recursion_quantities(c0);
    const auto q1 = recursion_quantities(n + 1, k, t, SymbolKind::I);
    const double nn = n;

    ResidualMap r;
    {
        const Eigen::MatrixXd ti = c0.inverse();
        const Eigen::MatrixXd tti = ti.transpose();
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        Eigen::MatrixXd shift_fwd = Eigen::MatrixXd::Zero(n, n);  // forward shift
        Eigen::MatrixXd shift_bwd = Eigen::MatrixXd::Zero(n, n);  // backward shift
        for (int i = 0; i < n; ++i)
            m(i, i) = i + 1;
        for (int i = 1; i < n; ++i) {
            shift_fwd(i, i - 1) = 1.0;
            shift_bwd(i - 1, i) = 1.0;
        }
        const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
        Eigen::VectorXd dp = Eigen::VectorXd::Zero(n);
        Eigen::VectorXd dm = Eigen::VectorXd::Zero(n);
        dp(0) = 1.0;
        dm(n - 1) = 1.0;
        const std::vector<Eigen::MatrixXd> terms = {
            ti * (m + t * id),
            -m * ti,
            ti * (m - (k + 1.0) * id) * shift_fwd,
            -shift_fwd * m * ti,
            t * shift_bwd * ti,
            -k * (ti * dp) * (tti * c0.ft_plus()).transpose(),
            -nn * (ti * c0.ft_minus()) * (tti * dm).transpose(),
            t * (ti * c0.f_plus()) * (tti * dp).transpose(),
        };
        Eigen::MatrixXd total = Eigen::MatrixXd::Zero(n, n);
        double scale = 0.0;
        for (const auto& term : terms) {
            total += term;
            scale = std::max(scale, term.norm());
        }
        const double norm2 = Eigen::JacobiSVD<Eigen::MatrixXd>(total).singularValues()(0);
        r["Mid"] = norm2 / std::max(1.0, scale);
    }
    r["id1"] = scaled_sum({nn * t, -(k + nn) * q0.ut_plus, t * q0.u_plus});
    r["id2"] = scaled_sum({-(t + nn) * q0.ut_minus, t * q0.ut_minus * q0.ut_minus * q1.u_minus,
                           -t * qm.ut_minus * q0.phi, -(k + nn + 1.0) * q1.ut_minus});
    r["id0"] = scaled_sum({t, (nn - 1.0) * qm.ut_plus, k * qm.u_minus * q0.ut_minus, -nn * q0.ut_plus,
                           -t * q0.u_minus * qm.ut_minus});
    r["id3"] = scaled_sum({t, (k - 1.0) * q0.ut_plus, (nn + 1.0) * q0.u_minus * q1.ut_minus, -k * q1.ut_plus,
                           -t * q1.u_minus * q0.ut_minus});
    r["id4"] = scaled_sum({nn * q0.ut_minus, q0.ut_minus * q0.ut_plus,
                           q0.phi * ((k + nn + 1.0) * q1.ut_minus + t * qm.ut_minus)});
    return r;
}

ResidualMap differentiation_residuals(int n, double k, double t, double h)
{
    require_positive_size(n);
    if (!(h > 0.0) || !(t - h > 0.0))
        throw std::invalid_argument("differentiation residuals need h > 0 and t - h > 0");
    const auto qm = lower_neighbour(n, k, t);
    const auto q0 = recursion_quantities(n, k, t, SymbolKind::I);
    const auto q1 = recursion_quantities(n + 1, k, t, SymbolKind::I);
    const ToeplitzContext lo(n, k, t - h, SymbolKind::I);
    const ToeplitzContext hi(n, k, t + h, SymbolKind::I);
    const auto a = recursion_quantities(lo);
    const auto b = recursion_quantities(hi);
    auto diff = [h](double lo_v, double hi_v) { return (hi_v - lo_v) / (2.0 * h); };
    const double nn = n;
    const double phi = q0.phi;

    ResidualMap r;
    r["dlogD"] = scaled(diff(lo.log_abs_determinant(), hi.log_abs_determinant()), q0.u_plus);
    r["d1"] = scaled(diff(a.u_plus, b.u_plus), -phi * qm.ut_minus * q1.u_minus);
    r["d2"] = scaled(diff(a.u_minus, b.u_minus), phi * q1.u_minus);
    r["d3"] = scaled(diff(a.ut_plus, b.ut_plus), phi);
    r["d4"] = scaled(diff(a.ut_minus, b.ut_minus), -phi * qm.ut_minus);
    // Cleared of the 1/(phi - 1) factor, which amplifies roundoff where phi is close to 1.
    r["d2Down"] = scaled_sum({(phi - 1.0) * diff(a.u_minus, b.u_minus), nn / t * (phi - 1.0) * q0.u_minus,
                              -(q0.ut_plus - t * phi) * q0.u_minus / t,
                              -phi * qm.ut_minus * q0.u_minus * q0.u_minus});
    r["d4Up"] = scaled(diff(a.ut_minus, b.ut_minus),
                       nn / t * q0.ut_minus + q0.ut_plus * q0.ut_minus / t + (k + 1.0 + nn) * phi * q1.ut_minus / t);
    return r;
}

double sigma_from_toeplitz(int n, double k, double t)
{
    const auto q = recursion_quantities(n, k, t, SymbolKind::I);
    return k * t - t * q.u_plus;
}

}  // namespace monoword

namespace monoword {

UtPlusJet ut_plus_jet(int n, double k, double t)
{
    require_positive_size(n);
    const auto qm = lower_neighbour(n, k, t);
    const auto q0 = recursion_quantities(n, k, t, SymbolKind::I);
    const auto q1 = recursion_quantities(n + 1, k, t, SymbolKind::I);
    UtPlusJet jet;
    jet.w = q0.ut_plus;
    jet.d1 = q0.phi;
    jet.d2 = q0.phi * (q0.u_minus * qm.ut_minus - q1.u_minus * q0.ut_minus);
    return jet;
}

}  // namespace monoword
