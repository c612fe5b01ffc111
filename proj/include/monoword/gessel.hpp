#pragma once

// Small-size checks of the symmetric-function side: Cauchy-Binet, Schur
// polynomials via Jacobi-Trudi, Gessel's Toeplitz identity (and its dual) in
// finitely many variables, and the Cauchy product limits.

#include "monoword/combinatorics.hpp"
#include "monoword/rational.hpp"

#include <functional>
#include <span>
#include <vector>

namespace monoword {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact determinant by Gaussian elimination with nonzero pivoting.
Rational determinant(RationalMatrix m);

// sum over increasing m-subsets S of det B(S|m) det A(m|S), with A m x n and
// B n x m, n >= m.
Rational cauchy_binet(const RationalMatrix& a, const RationalMatrix& b);

// Complete homogeneous h_r and elementary e_r symmetric polynomials.
Rational complete_homogeneous(int r, std::span<const Rational> x);
Rational elementary(int r, std::span<const Rational> x);

inline constexpr int kDefaultSchurLengthBound = 64;

// det(h_{lambda_i + j - i}(x)).
Rational schur_polynomial(const Partition& shape, std::span<const Rational> x,
                          int max_length = kDefaultSchurLengthBound);

// Finitely many variables x, y with |x_i|, |y_j| < 1.
class VariableAssignment {
public:
    VariableAssignment(std::vector<Rational> x, std::vector<Rational> y);
    const std::vector<Rational>& x() const { return x_; }
    const std::vector<Rational>& y() const { return y_; }

private:
    std::vector<Rational> x_;
    std::vector<Rational> y_;
};

// The Fourier coefficients A_i of the Gessel symbol for a variable assignment.
//   Standard:  prod (1 - y/z)^{-1} prod (1 - x z)^{-1},  A_i = sum_l h_{l+i}(x) h_l(y)
//   Dual:      prod (1 + y/z) prod (1 + x z),            A_i = sum_l e_{l+i}(x) e_l(y)
//   Mixed:     prod (1 + y/z) prod (1 - x z)^{-1},       A_i = sum_l h_{l+i}(x) e_l(y)
// The mixed symbol is the image of the standard one under omega in y alone.
enum class GesselVariant { Standard, Dual, Mixed };

class SymbolCoefficients {
public:
    SymbolCoefficients(const VariableAssignment& assignment, GesselVariant variant);
    // Double precision; infinite sums are carried until the geometric tail is negligible.
    double operator()(int i) const;
    GesselVariant variant() const { return variant_; }

private:
    GesselVariant variant_;
    std::vector<double> hx_;
    std::vector<double> hy_;
};

struct GesselCheck {
    double schur_side = 0.0;     // sum of s_lambda(x) s_lambda(y), truncated at max_weight
    double toeplitz_side = 0.0;  // det T_n(A)
    double residual = 0.0;       // |schur_side - toeplitz_side|
    double tail_bound = 0.0;     // rigorous bound on the omitted partitions
};

class TailNotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Standard: sum over length(lambda) <= n. Dual: sum over lambda_1 <= n.
// Throws TailNotConverged when the tail bound exceeds tail_tolerance.
GesselCheck gessel_check(int n, const VariableAssignment& assignment, int max_weight,
                         GesselVariant variant = GesselVariant::Standard, double tail_tolerance = 1e-3);

struct CauchyLimitReport {
    double limit = 0.0;                // the closed-form product
    std::vector<double> determinants;  // det T_n for n = 1..n_max
    std::vector<double> errors;        // |det T_n - limit|
    bool monotone = true;              // errors nonincreasing (up to roundoff)
};

// Standard and Dual converge to prod (1 - x_i y_j)^{-1}; Mixed converges to
// prod (1 + x_i y_j) (the dual Cauchy identity).
CauchyLimitReport cauchy_limit_check(const VariableAssignment& assignment, int n_max,
                                     GesselVariant variant = GesselVariant::Standard);

}  // namespace monoword
