#include "monoword/gessel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace monoword {

Rational determinant(RationalMatrix m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant needs a square matrix");
    Rational det = 1;
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t pivot = p;
        while (pivot < n && m[pivot][p] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != p) {
            std::swap(m[pivot], m[p]);
            det = -det;
        }
        det *= m[p][p];
        for (std::size_t i = p + 1; i < n; ++i) {
            if (m[i][p] == 0)
                continue;
            const Rational factor = m[i][p] / m[p][p];
            for (std::size_t j = p; j < n; ++j)
                m[i][j] -= factor * m[p][j];
        }
    }
    return det;
}

Rational cauchy_binet(const RationalMatrix& a, const RationalMatrix& b)
{
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? b.size() : a.front().size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("cauchy_binet: A rows must have equal length");
    if (b.size() != n)
        throw std::invalid_argument("cauchy_binet: B must have as many rows as A has columns");
    for (const auto& row : b)
        if (row.size() != m)
            throw std::invalid_argument("cauchy_binet: B must have as many columns as A has rows");
    if (n < m)
        throw std::invalid_argument("cauchy_binet needs n >= m");

    // Walk the increasing m-subsets of {0..n-1} in lexicographic order.
    std::vector<std::size_t> subset(m);
    for (std::size_t i = 0; i < m; ++i)
        subset[i] = i;
    Rational total = 0;
    for (;;) {
        RationalMatrix as(m, std::vector<Rational>(m));
        RationalMatrix bs(m, std::vector<Rational>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                as[i][j] = a[i][subset[j]];
                bs[i][j] = b[subset[i]][j];
            }
        total += determinant(std::move(bs)) * determinant(std::move(as));
        std::size_t pos = m;
        while (pos > 0 && subset[pos - 1] == n - m + pos - 1)
            --pos;
        if (pos == 0)
            break;
        ++subset[pos - 1];
        for (std::size_t i = pos; i < m; ++i)
            subset[i] = subset[i - 1] + 1;
    }
    return total;
}

namespace {

// h_0..h_max (complete) or e_0..e_max (elementary) of x, by adding one variable at a time.
std::vector<Rational> symmetric_sequence(int max_degree, std::span<const Rational> x, bool elementary)
{
    std::vector<Rational> out(static_cast<std::size_t>(max_degree) + 1, Rational(0));
    out[0] = 1;
    for (const Rational& xi : x) {
        if (elementary) {
            for (int r = max_degree; r >= 1; --r)
                out[r] += xi * out[r - 1];
        } else {
            for (int r = 1; r <= max_degree; ++r)
                out[r] += xi * out[r - 1];
        }
    }
    return out;
}

Rational schur_from_h(const Partition& shape, const std::vector<Rational>& h)
{
    const int m = shape.length();
    if (m == 0)
        return 1;
    RationalMatrix jt(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const int r = shape[i] + j - i;
            jt[i][j] = r < 0 ? Rational(0) : h[static_cast<std::size_t>(r)];
        }
    return determinant(std::move(jt));
}

}  // namespace

Rational complete_homogeneous(int r, std::span<const Rational> x)
{
    if (r < 0)
        return 0;
    return symmetric_sequence(r, x, false)[static_cast<std::size_t>(r)];
}

Rational elementary(int r, std::span<const Rational> x)
{
    if (r < 0)
        return 0;
    return symmetric_sequence(r, x, true)[static_cast<std::size_t>(r)];
}

Rational schur_polynomial(const Partition& shape, std::span<const Rational> x, int max_length)
{
    if (shape.length() > max_length)
        throw std::invalid_argument("partition length " + std::to_string(shape.length())
                                    + " exceeds the Schur length bound " + std::to_string(max_length));
    if (shape.length() > static_cast<int>(x.size()))
        return 0;
    return schur_from_h(shape, symmetric_sequence(shape.first_row() + shape.length(), x, false));
}

VariableAssignment::VariableAssignment(std::vector<Rational> x, std::vector<Rational> y)
    : x_(std::move(x)), y_(std::move(y))
{
    for (const auto* v : {&x_, &y_})
        for (const Rational& q : *v)
            if (abs(q) >= 1)
                throw std::invalid_argument("variables must satisfy |x_i| < 1 and |y_j| < 1");
}

namespace {

double max_abs(const std::vector<Rational>& v)
{
    double out = 0.0;
    for (const Rational& q : v)
        out = std::max(out, std::abs(q.get_d()));
    return out;
}

// h_r of doubles up to the degree where the bound C(r+p-1, p-1) rho^r is negligible.
std::vector<double> complete_sequence_double(const std::vector<Rational>& x)
{
    std::vector<double> xs;
    for (const Rational& q : x)
        xs.push_back(q.get_d());
    const double rho = max_abs(x);
    const double p = static_cast<double>(xs.size());
    int degree = 0;
    if (!xs.empty() && rho > 0.0) {
        double bound = 1.0;
        for (int r = 1;; ++r) {
            bound *= (r + p - 1.0) / r * rho;
            if (r > p && bound < 1e-18)
                break;
            degree = r;
            if (r > 100000)
                throw std::runtime_error("complete homogeneous series converges too slowly");
        }
        degree += 1;
    }
    std::vector<double> out(static_cast<std::size_t>(degree) + 1, 0.0);
    out[0] = 1.0;
    for (double xi : xs)
        for (int r = 1; r <= degree; ++r)
            out[r] += xi * out[r - 1];
    return out;
}

std::vector<double> elementary_sequence_double(const std::vector<Rational>& x)
{
    std::vector<double> out(x.size() + 1, 0.0);
    out[0] = 1.0;
    for (const Rational& q : x) {
        const double xi = q.get_d();
        for (std::size_t r = x.size(); r >= 1; --r)
            out[r] += xi * out[r - 1];
    }
    return out;
}

}  // namespace

SymbolCoefficients::SymbolCoefficients(const VariableAssignment& assignment, GesselVariant variant)
    : variant_(variant)
{
    const bool x_elementary = variant == GesselVariant::Dual;
    const bool y_elementary = variant != GesselVariant::Standard;
    hx_ = x_elementary ? elementary_sequence_double(assignment.x()) : complete_sequence_double(assignment.x());
    hy_ = y_elementary ? elementary_sequence_double(assignment.y()) : complete_sequence_double(assignment.y());
}

double SymbolCoefficients::operator()(int i) const
{
    // A_i = sum_l a_{l+i} b_l
    double sum = 0.0;
    const int nx = static_cast<int>(hx_.size());
    const int ny = static_cast<int>(hy_.size());
    for (int l = std::max(0, -i); l < ny && l + i < nx; ++l)
        sum += hx_[static_cast<std::size_t>(l + i)] * hy_[static_cast<std::size_t>(l)];
    return sum;
}

namespace {

double toeplitz_determinant(const SymbolCoefficients& a, int n)
{
    if (n == 0)
        return 1.0;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = a(i - j);
    return m.partialPivLu().determinant();
}

// Majorant of sum_{|lambda| = m} |s_lambda(x) s_lambda(y)| summed over m > w:
// sum_{m > w} C(m+P-1, P-1) rho^m with P = |x||y|, rho = max|x| max|y|.
double cauchy_tail_bound(const VariableAssignment& v, int w)
{
    const double rho = max_abs(v.x()) * max_abs(v.y());
    const double p = static_cast<double>(v.x().size() * v.y().size());
    if (p == 0.0 || rho == 0.0)
        return 0.0;
    // log of the term at m = w + 1
    const int m0 = w + 1;
    double log_term = std::lgamma(m0 + p) - std::lgamma(p) - std::lgamma(m0 + 1.0) + m0 * std::log(rho);
    double term = std::exp(log_term);
    double sum = 0.0;
    for (int m = m0;; ++m) {
        sum += term;
        const double ratio = (m + p) / (m + 1.0) * rho;
        // Ratios decrease in m, so once below 1 the rest is a dominated geometric series.
        if (ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-3 * sum)
            return sum + term * ratio / (1.0 - ratio);
        term *= ratio;
        if (m > m0 + 100000)
            return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

GesselCheck gessel_check(int n, const VariableAssignment& assignment, int max_weight, GesselVariant variant,
                         double tail_tolerance)
{
    if (n < 0)
        throw std::invalid_argument("matrix size must be nonnegative");
    if (max_weight < 0)
        throw std::invalid_argument("max_weight must be nonnegative");
    GesselCheck out;
    out.tail_bound = cauchy_tail_bound(assignment, max_weight);
    if (!(out.tail_bound <= tail_tolerance))
        throw TailNotConverged("tail beyond weight " + std::to_string(max_weight) + " is bounded by "
                               + std::to_string(out.tail_bound) + ", above the tolerance "
                               + std::to_string(tail_tolerance));

    const auto& x = assignment.x();
    const auto& y = assignment.y();
    const int px = static_cast<int>(x.size());
    const int py = static_cast<int>(y.size());
    const auto hx = symmetric_sequence(max_weight + px + py + 1, x, false);
    const auto hy = symmetric_sequence(max_weight + px + py + 1, y, false);

    Rational schur_side = 0;
    for (int m = 0; m <= max_weight; ++m) {
        for (const Partition& shape : partitions(m, std::max(m, 1))) {
            Rational term;
            switch (variant) {
            case GesselVariant::Standard:
                if (shape.length() > n || shape.length() > std::min(px, py))
                    continue;
                term = schur_from_h(shape, hx) * schur_from_h(shape, hy);
                break;
            case GesselVariant::Dual:
                if (shape.first_row() > n || shape.length() > std::min(px, py))
                    continue;
                term = schur_from_h(shape, hx) * schur_from_h(shape, hy);
                break;
            case GesselVariant::Mixed: {
                const Partition conj = shape.conjugate();
                if (shape.length() > n || shape.length() > px || conj.length() > py)
                    continue;
                term = schur_from_h(shape, hx) * schur_from_h(conj, hy);
                break;
            }
            }
            schur_side += term;
        }
    }
    out.schur_side = schur_side.get_d();
    out.toeplitz_side = toeplitz_determinant(SymbolCoefficients(assignment, variant), n);
    out.residual = std::abs(out.schur_side - out.toeplitz_side);
    return out;
}

CauchyLimitReport cauchy_limit_check(const VariableAssignment& assignment, int n_max, GesselVariant variant)
{
    if (n_max < 1)
        throw std::invalid_argument("n_max must be at least 1");
    CauchyLimitReport out;
    out.limit = 1.0;
    for (const Rational& xi : assignment.x())
        for (const Rational& yj : assignment.y()) {
            const double p = xi.get_d() * yj.get_d();
            out.limit *= variant == GesselVariant::Mixed ? 1.0 + p : 1.0 / (1.0 - p);
        }
    const SymbolCoefficients a(assignment, variant);
    for (int n = 1; n <= n_max; ++n) {
        const double det = toeplitz_determinant(a, n);
        out.determinants.push_back(det);
        out.errors.push_back(std::abs(det - out.limit));
    }
    for (std::size_t i = 1; i < out.errors.size(); ++i)
        if (out.errors[i] > out.errors[i - 1] + 1e-13 * std::abs(out.limit))
            out.monotone = false;
    return out;
}

}  // namespace monoword
