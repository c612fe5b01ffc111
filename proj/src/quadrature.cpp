#include "monoword/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monoword {

QuadratureRule gauss_legendre(int m, double a, double b)
{
    if (m < 1)
        throw std::invalid_argument("quadrature needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(m));
    rule.weights.resize(static_cast<std::size_t>(m));
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        // Tricomi's initial guess, then Newton on P_m.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= m; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            if (m == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (int j = 2; j <= m; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = m == 1 ? 1.0 : m * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = mid - half * x;
        rule.nodes[static_cast<std::size_t>(m - 1 - i)] = mid + half * x;
        rule.weights[static_cast<std::size_t>(i)] = half * w;
        rule.weights[static_cast<std::size_t>(m - 1 - i)] = half * w;
    }
    return rule;
}

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights mu0 * v0^2.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0)
{
    const int m = static_cast<int>(diag.size());
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        j(i, i) = diag(i);
        if (i + 1 < m) {
            j(i, i + 1) = offdiag(i);
            j(i + 1, i) = offdiag(i);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    QuadratureRule rule;
    for (int i = 0; i < m; ++i) {
        rule.nodes.push_back(es.eigenvalues()(i));
        const double v0 = es.eigenvectors()(0, i);
        rule.weights.push_back(mu0 * v0 * v0);
    }
    return rule;
}

}  // namespace

QuadratureRule gauss_laguerre(int m, double alpha)
{
    if (m < 1)
        throw std::invalid_argument("quadrature needs at least one node");
    if (alpha <= -1.0)
        throw std::invalid_argument("Laguerre weight needs alpha > -1");
    Eigen::VectorXd diag(m);
    Eigen::VectorXd off(std::max(m - 1, 0));
    for (int i = 0; i < m; ++i)
        diag(i) = 2.0 * i + 1.0 + alpha;
    for (int i = 1; i < m; ++i)
        off(i - 1) = std::sqrt(i * (i + alpha));
    return golub_welsch(diag, off, std::tgamma(alpha + 1.0));
}

QuadratureRule gauss_hermite(int m)
{
    if (m < 1)
        throw std::invalid_argument("quadrature needs at least one node");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd off(std::max(m - 1, 0));
    for (int i = 1; i < m; ++i)
        off(i - 1) = std::sqrt(0.5 * i);
    return golub_welsch(diag, off, std::sqrt(std::numbers::pi));
}

QuadratureRule composite_gauss_legendre(double a, double b, int panels, int m)
{
    if (panels < 1)
        throw std::invalid_argument("composite rule needs at least one panel");
    QuadratureRule out;
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const auto rule = gauss_legendre(m, a + p * width, a + (p + 1) * width);
        out.nodes.insert(out.nodes.end(), rule.nodes.begin(), rule.nodes.end());
        out.weights.insert(out.weights.end(), rule.weights.begin(), rule.weights.end());
    }
    return out;
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

}  // namespace monoword
