#include "monoword/laguerre.hpp"

#include "monoword/parallel.hpp"
#include "monoword/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace monoword {

double laguerre_polynomial(int k, double alpha, double x)
{
    if (k < 0)
        throw std::invalid_argument("Laguerre degree must be nonnegative");
    if (k == 0)
        return 1.0;
    double p0 = 1.0;
    double p1 = 1.0 + alpha - x;
    for (int j = 1; j < k; ++j) {
        const double p2 = ((2.0 * j + 1.0 + alpha - x) * p1 - (j + alpha) * p0) / (j + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

namespace {

// sqrt(k!/(n+k)!) x^{n/2} e^{-x/2}
double envelope(int k, int n, double x)
{
    if (x <= 0.0)
        return n == 0 && x == 0.0 ? std::exp(0.5 * (std::lgamma(k + 1.0) - std::lgamma(n + k + 1.0))) : 0.0;
    return std::exp(0.5 * (std::lgamma(k + 1.0) - std::lgamma(n + k + 1.0)) + 0.5 * n * std::log(x) - 0.5 * x);
}

}  // namespace

double phi_L(int k, int n, double x)
{
    if (k < 0)
        return 0.0;
    return envelope(k, n, x) * laguerre_polynomial(k, n, x);
}

double phi_L_derivative(int k, int n, double x)
{
    if (k < 0)
        return 0.0;
    if (!(x > 0.0))
        throw std::domain_error("phi_L derivative needs x > 0");
    const double e = envelope(k, n, x);
    const double l = laguerre_polynomial(k, n, x);
    // d/dx L_k^{(n)} = -L_{k-1}^{(n+1)}
    const double dl = k > 0 ? -laguerre_polynomial(k - 1, n + 1.0, x) : 0.0;
    return e * ((0.5 * n / x - 0.5) * l + dl);
}

LaguerreKernel::LaguerreKernel(int k, int n) : k_(k), n_(n), scale_(std::sqrt(double(k) * (k + n)))
{
    if (k < 1 || n < 0)
        throw std::invalid_argument("Laguerre kernel needs k >= 1 and n >= 0");
}

double LaguerreKernel::diagonal(double x) const
{
    return scale_ * (phi_L_derivative(k_ - 1, n_, x) * phi_L(k_, n_, x)
                     - phi_L_derivative(k_, n_, x) * phi_L(k_ - 1, n_, x));
}

double LaguerreKernel::operator()(double x, double y) const
{
    const double gap = x - y;
    if (std::abs(gap) < 1e-6 * std::max(1.0, std::abs(x) + std::abs(y)))
        return diagonal(0.5 * (x + y));
    return scale_ * (phi_L(k_ - 1, n_, x) * phi_L(k_, n_, y) - phi_L(k_, n_, x) * phi_L(k_ - 1, n_, y)) / gap;
}

Rational normalization_constant(int k, int n)
{
    if (k < 1 || n < 0)
        throw std::invalid_argument("normalization needs k >= 1 and n >= 0");
    BigInt d = 1;
    for (int j = 1; j <= k; ++j)
        d *= factorial(static_cast<unsigned long>(j));
    for (int j = 0; j < k; ++j)
        d *= factorial(static_cast<unsigned long>(n + j));
    return Rational(BigInt(1), d);
}

namespace {

Eigen::MatrixXd nystrom_matrix(int k, int n, double t, int m)
{
    if (!(t >= 0.0))
        throw std::invalid_argument("t must be nonnegative");
    if (m < 10)
        throw std::invalid_argument("Nystrom needs at least 10 nodes");
    const LaguerreKernel kernel(k, n);
    const auto rule = gauss_legendre(m, 0.0, t);
    Eigen::VectorXd sw(m);
    for (int i = 0; i < m; ++i)
        sw(i) = std::sqrt(rule.weights[static_cast<std::size_t>(i)]);
    Eigen::MatrixXd a(m, m);
    auto row = [&](std::size_t i) {
        const int r = static_cast<int>(i);
        for (int j = r; j < m; ++j) {
            const double v = sw(r) * kernel(rule.nodes[i], rule.nodes[static_cast<std::size_t>(j)]) * sw(j);
            a(r, j) = v;
            a(j, r) = v;
        }
    };
    if (m >= 160) {
        parallel_for(static_cast<std::size_t>(m), row);
    } else {
        for (int i = 0; i < m; ++i)
            row(static_cast<std::size_t>(i));
    }
    return a;
}

}  // namespace

double smallest_eigenvalue_prob_fredholm(int k, int n, double t, int m_nodes)
{
    if (t == 0.0)
        return 1.0;
    const Eigen::MatrixXd a = nystrom_matrix(k, n, t, m_nodes);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m_nodes, m_nodes);
    return (id - a).partialPivLu().determinant();
}

std::vector<double> nystrom_eigenvalues(int k, int n, double t, int m_nodes)
{
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(nystrom_matrix(k, n, t, m_nodes), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double smallest_eigenvalue_prob_quadrature(int k, int n, double t)
{
    if (k < 1 || n < 0)
        throw std::invalid_argument("quadrature route needs k >= 1 and n >= 0");
    if (k > kMaxQuadratureDimension)
        throw std::invalid_argument("quadrature route refuses k = " + std::to_string(k)
                                    + ": tensor budget allows k <= " + std::to_string(kMaxQuadratureDimension));
    if (t < 0.0)
        throw std::invalid_argument("t must be nonnegative");
    // x_j = t + y_j; the integrand in y is a polynomial of degree n + 2(k-1)
    // per variable against e^{-y}, so this node count is exact.
    const int m = (n + 2 * k) / 2 + 2;
    const auto rule = gauss_laguerre(m, 0.0);
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    double sum = 0.0;
    std::vector<double> x(static_cast<std::size_t>(k));
    for (;;) {
        double w = 1.0;
        for (int j = 0; j < k; ++j) {
            x[static_cast<std::size_t>(j)] = t + rule.nodes[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
            w *= rule.weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]
                 * std::pow(x[static_cast<std::size_t>(j)], n);
        }
        double vdm = 1.0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                vdm *= x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(i)];
        sum += w * vdm * vdm;
        int pos = 0;
        while (pos < k && ++idx[static_cast<std::size_t>(pos)] == m)
            idx[static_cast<std::size_t>(pos++)] = 0;
        if (pos == k)
            break;
    }
    return normalization_constant(k, n).get_d() * std::exp(-k * t) * sum;
}

}  // namespace monoword
