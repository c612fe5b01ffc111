#include "doctest.h"

#include "monoword/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace monoword;

TEST_CASE("Gauss-Legendre integrates polynomials exactly")
{
    for (int m = 1; m <= 30; ++m) {
        const auto rule = gauss_legendre(m, 0.0, 2.0);
        for (int p = 0; p <= 2 * m - 1; ++p) {
            const double exact = std::pow(2.0, p + 1) / (p + 1);
            CHECK(integrate([p](double x) { return std::pow(x, p); }, rule) == doctest::Approx(exact).epsilon(1e-13));
        }
    }
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("Gauss-Laguerre moments")
{
    for (double alpha : {0.0, 1.0, 2.5})
        for (int m : {5, 20}) {
            const auto rule = gauss_laguerre(m, alpha);
            for (int p = 0; p <= 2 * m - 1 && p < 12; ++p)
                CHECK(integrate([p](double x) { return std::pow(x, p); }, rule)
                      == doctest::Approx(std::tgamma(p + alpha + 1)).epsilon(1e-11));
        }
    CHECK_THROWS_AS(gauss_laguerre(4, -1.0), std::invalid_argument);
}

TEST_CASE("Gauss-Hermite moments")
{
    const auto rule = gauss_hermite(16);
    CHECK(integrate([](double) { return 1.0; }, rule) == doctest::Approx(std::sqrt(std::numbers::pi)));
    CHECK(integrate([](double x) { return x * x; }, rule) == doctest::Approx(std::sqrt(std::numbers::pi) / 2));
    CHECK(integrate([](double x) { return x * x * x; }, rule) == doctest::Approx(0.0));
}

TEST_CASE("composite rule")
{
    const auto rule = composite_gauss_legendre(0.0, std::numbers::pi, 8, 10);
    CHECK(rule.nodes.size() == 80);
    CHECK(integrate([](double x) { return std::sin(x); }, rule) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(composite_gauss_legendre(0, 1, 0, 4), std::invalid_argument);
}
