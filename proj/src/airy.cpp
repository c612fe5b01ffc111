#include "monoword/airy.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numbers>

namespace monoword {

namespace {

constexpr unsigned long kBits = 320;
constexpr double kSeriesRadius = 10.0;

// Ai(0) = 3^{-2/3}/Gamma(2/3), -Ai'(0) = 3^{-1/3}/Gamma(1/3).
const char* const kAi0 = "0.35502805388781723926006318600418317639797917419917724058332651030081004245";
const char* const kAip0 = "0.25881940379280679840518356018920396347909113835493458221000181385610277267";

AiryValue airy_series(double xd)
{
    const mpf_class x(xd, kBits);
    const mpf_class x3 = x * x * x;
    // Ai = a0 f - b0 g with f = sum c_k x^{3k}, g = sum d_k x^{3k+1},
    // c_k = c_{k-1}/((3k-1)3k), d_k = d_{k-1}/(3k(3k+1)).
    mpf_class f(1, kBits), g(x, kBits), fp(0, kBits), gp(1, kBits);
    mpf_class c(1, kBits), d(1, kBits);
    mpf_class p(x * x, kBits);  // x^{3k-1}
    const mpf_class eps(1e-80, kBits);
    for (unsigned long k = 1; k < 4000; ++k) {
        c /= (3 * k - 1) * (3 * k);
        d /= (3 * k) * (3 * k + 1);
        const mpf_class x3k = p * x;
        const mpf_class tf = c * x3k;
        const mpf_class tg = d * x3k * x;
        f += tf;
        g += tg;
        fp += c * (3 * k) * p;
        gp += d * (3 * k + 1) * x3k;
        p *= x3;
        if (k > 4 && abs(tf) <= eps * abs(f) && abs(tg) <= eps * (abs(g) + abs(gp)))
            break;
    }
    const mpf_class a0(kAi0, kBits);
    const mpf_class b0(kAip0, kBits);
    const mpf_class ai = a0 * f - b0 * g;
    const mpf_class aip = a0 * fp - b0 * gp;
    return {ai.get_d(), aip.get_d()};
}

AiryValue airy_asymptotic(double x)
{
    const double pi = std::numbers::pi;
    const double ax = std::abs(x);
    const double zeta = 2.0 / 3.0 * ax * std::sqrt(ax);
    // u_k and v_k coefficients.
    double u[64];
    double v[64];
    u[0] = 1.0;
    v[0] = 1.0;
    for (int k = 1; k < 64; ++k) {
        u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        v[k] = -u[k] * (6.0 * k + 1.0) / (6.0 * k - 1.0);
    }
    if (x > 0) {
        double su = 0.0, sv = 0.0, zk = 1.0, last = INFINITY;
        for (int k = 0; k < 64; ++k) {
            const double tu = (k % 2 ? -1.0 : 1.0) * u[k] * zk;
            if (std::abs(tu) > last)
                break;
            last = std::abs(tu);
            su += tu;
            sv += (k % 2 ? -1.0 : 1.0) * v[k] * zk;
            zk /= zeta;
        }
        const double pre = std::exp(-zeta) / (2.0 * std::sqrt(pi));
        return {pre / std::pow(ax, 0.25) * su, -pre * std::pow(ax, 0.25) * sv};
    }
    double pu = 0.0, qu = 0.0, pv = 0.0, qv = 0.0, zk = 1.0, last = INFINITY;
    for (int k = 0; k + 1 < 64; k += 2) {
        const double sign = (k / 2) % 2 ? -1.0 : 1.0;
        const double t0 = u[k] * zk;
        const double t1 = u[k + 1] * zk / zeta;
        if (std::abs(t0) > last)
            break;
        last = std::abs(t1);
        pu += sign * t0;
        qu += sign * t1;
        pv += sign * v[k] * zk;
        qv += sign * v[k + 1] * zk / zeta;
        zk /= zeta * zeta;
    }
    const double phase = zeta - pi / 4.0;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    const double r = std::pow(ax, 0.25);
    return {(c * pu + s * qu) / (std::sqrt(pi) * r), r * (s * pv - c * qv) / std::sqrt(pi)};
}

}  // namespace

AiryValue airy(double x)
{
    if (std::isnan(x))
        return {x, x};
    if (std::abs(x) <= kSeriesRadius)
        return airy_series(x);
    return airy_asymptotic(x);
}

}  // namespace monoword
