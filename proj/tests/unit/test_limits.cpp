#include "doctest.h"

#include "monoword/limits.hpp"
#include "monoword/quadrature.hpp"
#include "monoword/rng.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/airy.hpp>

#include <cmath>
#include <numbers>

using namespace monoword;

namespace {

// det(I - K_Airy) on (s, s + 14) by Nystrom with an independent Airy evaluator.
double f2_fredholm_oracle(double s)
{
    const auto rule = gauss_legendre(80, s, s + 14.0);
    const int m = static_cast<int>(rule.nodes.size());
    std::vector<double> ai(m), aip(m);
    for (int i = 0; i < m; ++i) {
        ai[i] = boost::math::airy_ai(rule.nodes[i]);
        aip[i] = boost::math::airy_ai_prime(rule.nodes[i]);
    }
    Eigen::MatrixXd a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const double x = rule.nodes[i], y = rule.nodes[j];
            const double kxy = i == j ? aip[i] * aip[i] - x * ai[i] * ai[i]
                                      : (ai[i] * aip[j] - aip[i] * ai[j]) / (x - y);
            a(i, j) = (i == j ? 1.0 : 0.0) - std::sqrt(rule.weights[i] * rule.weights[j]) * kxy;
        }
    return a.determinant();
}

}  // namespace

TEST_CASE("gamma_k prefactor")
{
    // gamma_2^{-1} = 1! 2! (2 pi)^{1/2} 2^{-3/2}.
    CHECK(gamma_k(2) == doctest::Approx(1.0 / (2.0 * std::sqrt(2 * std::numbers::pi) / std::pow(2.0, 1.5))));
    CHECK(std::exp(log_gamma_k(4)) == doctest::Approx(gamma_k(4)));
    CHECK_THROWS_AS(gamma_k(0), std::invalid_argument);
}

TEST_CASE("traceless distribution basics")
{
    for (int k = 2; k <= 4; ++k) {
        CHECK(f0_quadrature(0.0, k) == doctest::Approx(0.0));
        CHECK(f0_quadrature(-1.0, k) == 0.0);
        CHECK(std::abs(f0_quadrature(std::numeric_limits<double>::infinity(), k) - 1.0) < 1e-6);
        CHECK(std::abs(f0_quadrature(8.0, k) - 1.0) < 1e-6);
        double last = 0.0;
        for (double s = 0.1; s <= 3.0; s += 0.1) {
            const double v = f0_quadrature(s, k);
            CHECK(v >= last - 1e-12);
            last = v;
        }
    }
    CHECK_THROWS_AS(f0_quadrature(1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(f0_quadrature(1.0, 1), std::invalid_argument);
}

TEST_CASE("k = 2 closed form")
{
    for (double s = 0.0; s <= 3.0; s += 0.125) {
        const double closed = std::erf(std::sqrt(2.0) * s)
                              - 2.0 * std::sqrt(2.0) / std::sqrt(std::numbers::pi) * s * std::exp(-2 * s * s);
        CHECK(f0_closed_form_k2(s) == doctest::Approx(closed).epsilon(1e-14));
        CHECK(std::abs(f0_quadrature(s, 2) - closed) < 1e-8);
    }
    CHECK(f0_closed_form_k2(-1.0) == 0.0);
    CHECK(f0_closed_form_k2(20.0) == doctest::Approx(1.0));
}

TEST_CASE("Monte Carlo route")
{
    MonteCarloOptions mc;
    mc.samples = 200'000;
    for (int k = 2; k <= 4; ++k)
        for (double s : {0.8, 1.5, 2.5}) {
            const auto e = f0_montecarlo(s, k, mc);
            CHECK(e.error > 0.0);
            CHECK(std::abs(e.value - f0_quadrature(s, k)) < 4.0 * e.error + 1e-12);
        }
    // Reproducible given the seed.
    CHECK(f0_montecarlo(1.2, 3, mc).value == f0_montecarlo(1.2, 3, mc).value);
    MonteCarloOptions tight = mc;
    tight.target_error = 1e-9;
    CHECK_THROWS_AS(f0(1.0, 3, F0Method::MonteCarlo, tight), PrecisionNotReached);
    const auto e6 = f0_montecarlo(std::numeric_limits<double>::infinity(), 6, mc);
    CHECK(std::abs(e6.value - 1.0) < 4.0 * e6.error + 1e-12);
}

TEST_CASE("counter RNG")
{
    CounterRng a(5, 1), b(5, 1), c(5, 2);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
        CHECK(u == b.uniform());
    }
    CHECK(a.next_u64() != c.next_u64());
}

TEST_CASE("GUE distribution")
{
    for (int k : {2, 3}) {
        for (double s : {-0.5, 0.3, 1.0, 2.0})
            CHECK(std::abs(gue_F(s, k, GueRoute::Convolution) - gue_F(s, k, GueRoute::Direct)) < 1e-5);
        CHECK(gue_F(9.0, k) == doctest::Approx(1.0).epsilon(1e-9));
        // Sandwich: F(s) >= F0(s - delta) - P(trace mean > delta).
        for (double s : {0.5, 1.0, 1.5, 2.0})
            for (double delta : {0.1, 0.3, 0.6}) {
                const double lower = f0_quadrature(s - delta, k) - 0.5 * std::erfc(delta * std::sqrt(double(k)));
                CHECK(gue_F(s, k) >= lower - 1e-10);
            }
    }
}

TEST_CASE("Theorem 4 convergence")
{
    const auto r = theorem4_convergence(2, {20, 40, 80});
    REQUIRE(r.rows.size() == 3);
    CHECK(r.strictly_decreasing);
    for (std::size_t i = 1; i < r.rows.size(); ++i)
        CHECK(r.rows[i].sup_error < r.rows[i - 1].sup_error);
    // Tails: both sides near 0 and near 1.
    const auto low = theorem4_convergence(2, {100}, -6.0, -4.0);
    CHECK(low.rows[0].sup_error < 1e-6);
    const auto high = theorem4_convergence(2, {100}, 4.0, 6.0);
    CHECK(high.rows[0].sup_error < 1e-6);
    CHECK_THROWS_AS(theorem4_convergence(2, {0}), std::invalid_argument);
}

TEST_CASE("edge law F2")
{
    std::vector<double> grid;
    for (double s = -8.0; s <= 6.0 + 1e-12; s += 0.25)
        grid.push_back(s);
    const auto pts = f2(grid);
    REQUIRE(pts.size() == grid.size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        CHECK(pts[i].F2 >= pts[i - 1].F2);
    CHECK(pts.back().F2 > 1 - 1e-6);
    CHECK(pts.front().F2 < 1e-3);
    for (const auto& p : pts) {
        CHECK(std::abs(p.invariant_residual) < 1e-10);
        if (p.s >= 4.0)
            CHECK(std::abs(p.q / boost::math::airy_ai(p.s) - 1.0) < 1e-4);
    }
    // Against the Airy-kernel Fredholm determinant.
    for (const auto& p : pts)
        if (p.s >= -6.0)
            CHECK(std::abs(p.F2 - f2_fredholm_oracle(p.s)) < 1e-8);
    // q'' = s q + 2 q^3 by differences of q'.
    const std::vector<double> g{-2.0 - 1e-4, -2.0, -2.0 + 1e-4, 1.0 - 1e-4, 1.0, 1.0 + 1e-4};
    const auto d = f2(g);
    for (int c : {1, 4}) {
        const double q2 = (d[c + 1].q_prime - d[c - 1].q_prime) / 2e-4;
        CHECK(q2 == doctest::Approx(d[c].s * d[c].q + 2 * std::pow(d[c].q, 3)).epsilon(1e-6));
    }
    CHECK_THROWS_AS(f2({-9.0}), std::invalid_argument);
    CHECK_THROWS_AS(f2({1.0, 0.5}), std::invalid_argument);
}

TEST_CASE("large-k limit check")
{
    std::vector<double> grid;
    for (double s = -2.0; s <= 2.0 + 1e-12; s += 0.5)
        grid.push_back(s);
    const auto r = fklim_check({2, 3, 4}, grid);
    REQUIRE(r.sup_error.size() == 3);
    for (const auto& [k, err] : r.sup_error) {
        CHECK(err > 1e-6);
        CHECK(err < 0.2);
    }
    double last_f0 = -1, last_f2 = -1;
    for (const auto& row : r.rows)
        if (row.k == 4) {
            CHECK(row.f0 >= last_f0);
            CHECK(row.f2 >= last_f2);
            last_f0 = row.f0;
            last_f2 = row.f2;
        }
}

TEST_CASE("scaled ell_k reparametrization")
{
    for (int k = 2; k <= 4; ++k)
        for (double s : {0.5, 1.0, 2.0})
            CHECK(ell_k_cdf(s, k) == doctest::Approx(f0_quadrature(s * std::sqrt(k / 2.0), k)));
    CHECK(ell_k_cdf(1.0, 2) == doctest::Approx(f0_closed_form_k2(1.0)).epsilon(1e-8));
}
