#pragma once

// Truncated power series in t with exact rational coefficients, and the
// Toeplitz determinants of the word symbols computed in that ring.
//
// G_I(n; k, kt) = det T_n(e^{t/z}(1+z)^k), G_D(n; k, kt) = det T_n(e^{t/z}(1-z)^{-k}),
// so F(n; k, N) = [t^N] det * N!/k^N. The kt scaling is applied only when a
// coefficient is extracted; the series itself is never rescaled.

#include "monoword/combinatorics.hpp"
#include "monoword/rational.hpp"
#include "monoword/symbol.hpp"

#include <vector>

namespace monoword {

inline constexpr int kDefaultSeriesOrder = 12;

class RationalSeries {
public:
    // Zero series carrying coefficients c_0..c_order.
    explicit RationalSeries(int order = 0);
    RationalSeries(std::vector<Rational> coefficients);

    static RationalSeries constant(const Rational& c, int order);
    static RationalSeries monomial(int power, const Rational& c, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coefficients() const { return c_; }

    RationalSeries truncated(int order) const;
    RationalSeries derivative() const;
    // Multiplicative inverse; requires a nonzero constant term.
    RationalSeries inverse() const;
    bool is_zero() const;
    // Horner evaluation in double precision.
    double evaluate(double t) const;

    RationalSeries& operator+=(const RationalSeries& rhs);
    RationalSeries& operator-=(const RationalSeries& rhs);
    RationalSeries& operator*=(const Rational& c);

    friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
    friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(RationalSeries a, const Rational& c) { return a *= c; }
    // Exact division; the divisor must have a nonzero constant term.
    friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
    friend bool operator==(const RationalSeries& a, const RationalSeries& b);

private:
    std::vector<Rational> c_;
};

struct Symbol {
    SymbolKind kind = SymbolKind::I;
    int k = 1;  // alphabet size; ignored for P
};

// Exact f_j(t) as a series to the given order. For P the coefficient is the
// one of e^{t(z+1/z)}, so t^2 carries the permutation length.
RationalSeries symbol_coefficient(const Symbol& symbol, int j, int order);

// det T_n(f) over the series ring; n = 0 gives 1.
RationalSeries toeplitz_det_series(int n, const Symbol& symbol, int order);

// Determinant of an arbitrary square matrix of series, by fraction-free
// elimination. Every leading principal minor must have a nonzero constant term.
RationalSeries series_determinant(std::vector<std::vector<RationalSeries>> m, int order);

// [t^N] det * N!/k^N for the I or D symbol.
Rational extract_distribution(const RationalSeries& det, int k, int N);
Rational extract_distribution(int n, int k, Statistic which, int N, int order = kDefaultSeriesOrder);
DistributionTable distribution_table_via_series(int k, int N, Statistic which, int order = -1);

// F_P(n; N), the probability that a uniform permutation of N letters has
// longest increasing subsequence <= n: [t^{2N}] det T_n(e^{t(z+1/z)}) * N!.
Rational extract_permutation_distribution(int n, int N);

// sigma(t) = -t d/dt log(e^{-kt} D_n(t)) = kt - t D_n'/D_n for the I symbol.
RationalSeries sigma_series(int n, int k, int order);
// The same quantity for the D symbol: t (k - D_n'/D_n) expanded in t, which is
// sigma(-t) of the P_V problem with parameters (n, -k).
RationalSeries sigma_series_decreasing(int n, int k, int order);

}  // namespace monoword
