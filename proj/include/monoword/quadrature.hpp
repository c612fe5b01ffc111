#pragma once

// Gaussian quadrature rules: Legendre by Newton iteration on the three-term
// recurrence, Laguerre and Hermite by the Golub-Welsch eigenvalue method.

#include <functional>
#include <vector>

namespace monoword {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// m-point Gauss-Legendre on [a, b].
QuadratureRule gauss_legendre(int m, double a = -1.0, double b = 1.0);

// Weight x^alpha e^{-x} on (0, inf).
QuadratureRule gauss_laguerre(int m, double alpha = 0.0);

// Weight e^{-x^2} on the real line.
QuadratureRule gauss_hermite(int m);

// Equal panels on [a, b], each carrying an m-point Gauss-Legendre rule.
QuadratureRule composite_gauss_legendre(double a, double b, int panels, int m);

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule);

}  // namespace monoword
