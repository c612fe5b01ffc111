#pragma once

// Smallest eigenvalue of the k x k Laguerre ensemble with weight x^n e^{-x}.
// Note the roles: k is the matrix size, n the weight exponent.
//
// Prob(lambda_min >= t) = det(I - K_L) on (0, t), with
//   K_L(x, y) = sqrt(k(k+n)) (phi_{k-1}(x) phi_k(y) - phi_k(x) phi_{k-1}(y)) / (x - y),
//   phi_k(x) = sqrt(k!/(n+k)!) x^{n/2} e^{-x/2} L_k^{(n)}(x).
// With the usual sign of L_k^{(n)} (leading coefficient (-1)^k/k!) this
// ordering is the Christoffel-Darboux sum of phi_j(x) phi_j(y) over j < k.

#include "monoword/rational.hpp"

#include <vector>

namespace monoword {

// Generalized Laguerre polynomial L_k^{(alpha)}(x) by the three-term recurrence.
double laguerre_polynomial(int k, double alpha, double x);

double phi_L(int k, int n, double x);
double phi_L_derivative(int k, int n, double x);

class LaguerreKernel {
public:
    LaguerreKernel(int k, int n);
    int k() const { return k_; }
    int n() const { return n_; }
    double operator()(double x, double y) const;
    // Limit y -> x, from the derivatives of phi.
    double diagonal(double x) const;

private:
    int k_;
    int n_;
    double scale_;
};

// c_{k,n} = 1 / (1! 2! ... k! prod_{j<k} (n+j)!).
Rational normalization_constant(int k, int n);

inline constexpr int kDefaultNystromNodes = 40;

// Nystrom with Gauss-Legendre nodes on (0, t) and symmetric sqrt-weights.
double smallest_eigenvalue_prob_fredholm(int k, int n, double t, int m_nodes = kDefaultNystromNodes);

// Eigenvalues of the symmetrized Nystrom matrix, ascending.
std::vector<double> nystrom_eigenvalues(int k, int n, double t, int m_nodes = kDefaultNystromNodes);

inline constexpr int kMaxQuadratureDimension = 3;

// c_{k,n} times the k-fold integral over (t, inf)^k, by tensor Gauss-Laguerre.
// Refuses k > 3.
double smallest_eigenvalue_prob_quadrature(int k, int n, double t);

}  // namespace monoword
