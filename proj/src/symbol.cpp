#include "monoword/symbol.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace monoword {

std::string symbol_name(SymbolKind kind)
{
    switch (kind) {
    case SymbolKind::I: return "I";
    case SymbolKind::D: return "D";
    case SymbolKind::P: return "P";
    }
    return "?";
}

SymbolKind parse_symbol_kind(const std::string& tag)
{
    if (tag == "I")
        return SymbolKind::I;
    if (tag == "D")
        return SymbolKind::D;
    if (tag == "P")
        return SymbolKind::P;
    throw std::invalid_argument("symbol kind must be I, D or P, got '" + tag + "'");
}

double generalized_binomial(double a, int q)
{
    if (q < 0)
        return 0.0;
    double out = 1.0;
    for (int i = 0; i < q; ++i)
        out *= (a - i) / (i + 1);
    return out;
}

namespace {

bool is_nonnegative_integer(double a)
{
    return a >= 0.0 && a == std::floor(a);
}

// sum_{m >= max(0,-j)} t^m/m! * c(j+m), where c(q) = binom(a, q) for I and
// binom(k+q-1, q) for D.
double exponential_binomial_sum(SymbolKind kind, double k, double t, int j)
{
    const int m0 = j < 0 ? -j : 0;
    const bool finite = kind == SymbolKind::I && is_nonnegative_integer(k);
    const int m_max_finite = finite ? static_cast<int>(k) - j : -1;
    if (finite && m_max_finite < m0)
        return 0.0;

    // term(m) = t^m/m! * c(j+m), updated by ratios.
    double term = std::pow(t, m0) / std::tgamma(m0 + 1.0);
    const int q0 = j + m0;
    term *= kind == SymbolKind::I ? generalized_binomial(k, q0) : generalized_binomial(k + q0 - 1.0, q0);
    double sum = term;
    if (t == 0.0)
        return sum;
    double scale = std::abs(term);
    for (int m = m0 + 1;; ++m) {
        if (finite && m > m_max_finite)
            break;
        const int q = j + m;  // q >= 1 here
        // c(q)/c(q-1): (a-q+1)/q for I, (k+q-1)/q for D.
        const double ratio = kind == SymbolKind::I ? (k - q + 1.0) / q : (k + q - 1.0) / q;
        if (term == 0.0) {
            // Restart after an exact zero (integer k in the D kernel or I kernel).
            term = std::pow(t, m) / std::tgamma(m + 1.0)
                 * (kind == SymbolKind::I ? generalized_binomial(k, q) : generalized_binomial(k + q - 1.0, q));
        } else {
            term *= t / m * ratio;
        }
        sum += term;
        scale = std::max(scale, std::abs(term));
        if (!finite && m > m0 + 4 && std::abs(term) <= 1e-18 * std::max(scale, std::abs(sum))
            && std::abs(t) * std::abs(k + q) / ((m + 1.0) * (q + 1.0)) < 0.5)
            break;
        if (m > m0 + 2000)
            throw std::runtime_error("fourier_coefficient: series did not converge");
    }
    return sum;
}

// Coefficient of z^j in e^{t(z+1/z)}: sum_m t^{2m+|j|}/(m!(m+|j|)!).
double bessel_coefficient(double t, int j)
{
    const int a = j < 0 ? -j : j;
    double term = std::pow(t, a) / std::tgamma(a + 1.0);
    double sum = term;
    for (int m = 1; m < 2000; ++m) {
        term *= t * t / (m * static_cast<double>(m + a));
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum) && t * t < 0.5 * (m + 1.0) * (m + 1.0 + a))
            break;
    }
    return sum;
}

}  // namespace

double fourier_coefficient(SymbolKind kind, double k, double t, int j)
{
    if (kind == SymbolKind::P)
        return bessel_coefficient(t, j);
    return exponential_binomial_sum(kind, k, t, j);
}

}  // namespace monoword
