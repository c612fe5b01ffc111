#include "monoword/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace monoword {

RationalSeries::RationalSeries(int order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

RationalSeries::RationalSeries(std::vector<Rational> coefficients) : c_(std::move(coefficients))
{
    if (c_.empty())
        throw std::invalid_argument("series needs at least one coefficient");
}

RationalSeries RationalSeries::constant(const Rational& c, int order)
{
    RationalSeries s(order);
    s[0] = c;
    return s;
}

RationalSeries RationalSeries::monomial(int power, const Rational& c, int order)
{
    RationalSeries s(order);
    if (power >= 0 && power <= order)
        s[power] = c;
    return s;
}

RationalSeries RationalSeries::truncated(int order) const
{
    RationalSeries s(order);
    for (int i = 0; i <= std::min(order, this->order()); ++i)
        s[i] = c_[static_cast<std::size_t>(i)];
    return s;
}

RationalSeries RationalSeries::derivative() const
{
    RationalSeries s(std::max(order() - 1, 0));
    for (int i = 1; i <= order(); ++i)
        s[i - 1] = c_[static_cast<std::size_t>(i)] * i;
    return s;
}

RationalSeries RationalSeries::inverse() const
{
    if (c_[0] == 0)
        throw std::domain_error("series inverse needs a nonzero constant term");
    RationalSeries out(order());
    out[0] = 1 / c_[0];
    for (int i = 1; i <= order(); ++i) {
        Rational acc = 0;
        for (int j = 1; j <= i; ++j)
            acc += c_[static_cast<std::size_t>(j)] * out[i - j];
        out[i] = -acc * out[0];
    }
    return out;
}

bool RationalSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

double RationalSeries::evaluate(double t) const
{
    double acc = 0.0;
    for (int i = order(); i >= 0; --i)
        acc = acc * t + c_[static_cast<std::size_t>(i)].get_d();
    return acc;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& rhs)
{
    c_.resize(static_cast<std::size_t>(std::min(order(), rhs.order())) + 1);
    for (int i = 0; i <= order(); ++i)
        c_[static_cast<std::size_t>(i)] += rhs[i];
    return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& rhs)
{
    c_.resize(static_cast<std::size_t>(std::min(order(), rhs.order())) + 1);
    for (int i = 0; i <= order(); ++i)
        c_[static_cast<std::size_t>(i)] -= rhs[i];
    return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& c)
{
    for (auto& q : c_)
        q *= c;
    return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b)
{
    const int order = std::min(a.order(), b.order());
    RationalSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= order; ++j)
            if (b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    return out;
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b)
{
    const int order = std::min(a.order(), b.order());
    if (b[0] == 0)
        throw std::domain_error("series division needs a divisor with nonzero constant term");
    RationalSeries out(order);
    const Rational inv0 = 1 / b[0];
    for (int i = 0; i <= order; ++i) {
        Rational acc = a[i];
        for (int j = 1; j <= i; ++j)
            if (b[j] != 0)
                acc -= b[j] * out[i - j];
        out[i] = acc * inv0;
    }
    return out;
}

bool operator==(const RationalSeries& a, const RationalSeries& b)
{
    return a.coefficients() == b.coefficients();
}

RationalSeries symbol_coefficient(const Symbol& symbol, int j, int order)
{
    RationalSeries s(order);
    if (symbol.kind == SymbolKind::P) {
        const int a = j < 0 ? -j : j;
        for (int m = 0; 2 * m + a <= order; ++m) {
            Rational c(1);
            c /= Rational(factorial(static_cast<unsigned long>(m)) * factorial(static_cast<unsigned long>(m + a)));
            s[2 * m + a] = c;
        }
        return s;
    }
    if (symbol.k < 0)
        throw std::invalid_argument("alphabet size must be nonnegative");
    for (int m = std::max(0, -j); m <= order; ++m) {
        const int q = j + m;
        const BigInt binom = symbol.kind == SymbolKind::I ? binomial(symbol.k, q)
                                                          : (symbol.k == 0 ? BigInt(q == 0 ? 1 : 0)
                                                                           : binomial(symbol.k + q - 1, q));
        if (binom == 0)
            continue;
        Rational c(binom, factorial(static_cast<unsigned long>(m)));
        c.canonicalize();
        s[m] = c;
    }
    return s;
}

RationalSeries series_determinant(std::vector<std::vector<RationalSeries>> m, int order)
{
    const std::size_t n = m.size();
    if (n == 0)
        return RationalSeries::constant(1, order);
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("series determinant needs a square matrix");
    // Bareiss: after step p every entry (i, j > p) is a (p+2)-minor, and the
    // division by the previous pivot is exact in the truncated ring.
    RationalSeries prev = RationalSeries::constant(1, order);
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (m[p][p][0] == 0)
            throw std::domain_error("leading principal minor has zero constant term");
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j)
                m[i][j] = (m[p][p] * m[i][j] - m[i][p] * m[p][j]) / prev;
        }
        prev = m[p][p];
    }
    return m[n - 1][n - 1].truncated(order);
}

RationalSeries toeplitz_det_series(int n, const Symbol& symbol, int order)
{
    if (n < 0)
        throw std::invalid_argument("matrix size must be nonnegative");
    std::vector<RationalSeries> coeff;
    coeff.reserve(2 * static_cast<std::size_t>(n));
    for (int j = -(n - 1); j <= n - 1; ++j)
        coeff.push_back(symbol_coefficient(symbol, j, order));
    std::vector<std::vector<RationalSeries>> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        m[i].reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            m[i].push_back(coeff[static_cast<std::size_t>(i - j + n - 1)]);
    }
    return series_determinant(std::move(m), order);
}

Rational extract_distribution(const RationalSeries& det, int k, int N)
{
    if (N < 0)
        throw std::invalid_argument("word length N must be nonnegative");
    if (N > det.order())
        throw std::out_of_range("N=" + std::to_string(N) + " is beyond the series truncation order "
                                + std::to_string(det.order()));
    BigInt kN;
    mpz_ui_pow_ui(kN.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(N));
    Rational out = det[N] * Rational(factorial(static_cast<unsigned long>(N)));
    out /= Rational(kN);
    out.canonicalize();
    return out;
}

Rational extract_distribution(int n, int k, Statistic which, int N, int order)
{
    if (k < 1)
        throw std::invalid_argument("alphabet size k must be positive");
    if (N > order)
        throw std::out_of_range("N=" + std::to_string(N) + " is beyond the series truncation order "
                                + std::to_string(order));
    const Symbol symbol{which == Statistic::WeaklyIncreasing ? SymbolKind::I : SymbolKind::D, k};
    return extract_distribution(toeplitz_det_series(n, symbol, order), k, N);
}

DistributionTable distribution_table_via_series(int k, int N, Statistic which, int order)
{
    if (order < 0)
        order = N;
    std::vector<Rational> cdf;
    cdf.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        cdf.push_back(extract_distribution(n, k, which, N, order));
    return DistributionTable(k, N, which, Route::Series, std::move(cdf));
}

Rational extract_permutation_distribution(int n, int N)
{
    if (N < 0)
        throw std::invalid_argument("permutation length must be nonnegative");
    const RationalSeries det = toeplitz_det_series(n, Symbol{SymbolKind::P, 0}, 2 * N);
    Rational out = det[2 * N] * Rational(factorial(static_cast<unsigned long>(N)));
    out.canonicalize();
    return out;
}

namespace {

RationalSeries sigma_from_det(const RationalSeries& det, int k, int order)
{
    // t*(k - D'/D), truncated to the requested order.
    RationalSeries log_derivative = det.derivative().truncated(std::max(order - 1, 0)) / det.truncated(std::max(order - 1, 0));
    RationalSeries out(order);
    if (order >= 1)
        out[1] = k;
    for (int i = 0; i + 1 <= order; ++i)
        out[i + 1] -= log_derivative[i];
    return out;
}

}  // namespace

RationalSeries sigma_series(int n, int k, int order)
{
    return sigma_from_det(toeplitz_det_series(n, Symbol{SymbolKind::I, k}, order), k, order);
}

RationalSeries sigma_series_decreasing(int n, int k, int order)
{
    return sigma_from_det(toeplitz_det_series(n, Symbol{SymbolKind::D, k}, order), k, order);
}

}  // namespace monoword
