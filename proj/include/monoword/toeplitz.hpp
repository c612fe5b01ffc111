#pragma once

// Floating-point Toeplitz matrices T_n(f) = (f_{i-j}) for the word symbols,
// the scalar inner products built from T_n^{-1}, and residual evaluators for
// the recursion and differentiation identities they satisfy.
//
// Vectors (length n): delta+ = e_0, delta- = e_{n-1}, f+ = (f_1..f_n),
// f- = (f_n..f_1), ft+ = (f_{-1}..f_{-n}), ft- = (f_{-n}..f_{-1}).
// Tilde quantities use the transposed matrix.

#include "monoword/symbol.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace monoword {

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable after construction; one LU factorization serves every solve.
class ToeplitzContext {
public:
    ToeplitzContext(int n, double k, double t, SymbolKind kind);

    int size() const { return n_; }
    double k() const { return k_; }
    double t() const { return t_; }
    SymbolKind kind() const { return kind_; }

    // f_j for |j| <= n + 1.
    double fourier(int j) const { return coeff_[static_cast<std::size_t>(j + n_ + 1)]; }
    const Eigen::MatrixXd& matrix() const { return matrix_; }
    // Reciprocal condition number estimate in the 1-norm.
    double rcond() const { return rcond_; }

    Eigen::VectorXd f_plus() const;
    Eigen::VectorXd f_minus() const;
    Eigen::VectorXd ft_plus() const;
    Eigen::VectorXd ft_minus() const;

    // T^{-1} b and (T^T)^{-1} b.
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const;
    Eigen::VectorXd solve_transposed(const Eigen::VectorXd& b) const;
    Eigen::MatrixXd inverse() const;

    double determinant() const;
    // log|D_n|, summed over the LU diagonal so it never overflows.
    double log_abs_determinant() const;

private:
    void require_nonsingular() const;

    int n_;
    double k_;
    double t_;
    SymbolKind kind_;
    std::vector<double> coeff_;
    Eigen::MatrixXd matrix_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double rcond_ = 1.0;
};

struct DeterminantResult {
    double value = 1.0;
    double condition = 1.0;  // 1/rcond
};

// D_n = det T_n; D_0 = 1. Throws SingularMatrixError naming the condition estimate.
DeterminantResult toeplitz_det(const ToeplitzContext& ctx);
double toeplitz_det(int n, double k, double t, SymbolKind kind);

struct RecursionQuantities {
    int n = 0;
    double k = 0.0;
    double t = 0.0;
    double u_plus = 0.0;    // (T^{-1} f+, delta+)
    double u_minus = 0.0;   // (T^{-1} f+, delta-)
    double ut_plus = 0.0;   // (T~^{-1} ft+, delta+)
    double ut_minus = 0.0;  // (T~^{-1} ft+, delta-)
    double v_plus = 0.0;    // (T^{-1} delta+, delta+) = D_{n-1}/D_n
    double v_minus = 0.0;   // (T^{-1} delta+, delta-)
    double vt_minus = 0.0;  // (T~^{-1} delta+, delta-)
    double phi = 1.0;       // 1 - u_minus * ut_minus
};

// n = 0 gives every U and V quantity zero and phi = 1.
RecursionQuantities recursion_quantities(const ToeplitzContext& ctx);
RecursionQuantities recursion_quantities(int n, double k, double t, SymbolKind kind);

using ResidualMap = std::map<std::string, double>;

// Each residual is |lhs - rhs| / max(1, |lhs|, |rhs|). Valid for any symbol; n >= 1.
ResidualMap universal_identity_residuals(int n, double k, double t, SymbolKind kind);

// Identities specific to e^{t/z}(1+z)^k; n >= 1. "Mid" is the spectral norm of
// the matrix identity divided by the largest term norm.
ResidualMap nonuniversal_identity_residuals(int n, double k, double t);

inline double default_difference_step(double t) { return 1e-4 * std::max(1.0, t); }

// Central differences against the closed-form derivatives; requires t - h > 0.
ResidualMap differentiation_residuals(int n, double k, double t, double h);

// sigma = k t - t U+_n for the I symbol.
double sigma_from_toeplitz(int n, double k, double t);

// Ut+_n with its first two t-derivatives from the closed-form derivative
// identities (Ut+' = phi). I symbol, real k and t, n >= 1.
struct UtPlusJet {
    double w = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};
UtPlusJet ut_plus_jet(int n, double k, double t);

}  // namespace monoword
