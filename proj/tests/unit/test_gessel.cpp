#include "doctest.h"

#include "monoword/gessel.hpp"

#include <random>

using namespace monoword;

namespace {

RationalMatrix random_matrix(std::mt19937_64& gen, int rows, int cols)
{
    RationalMatrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (auto& row : m)
        for (auto& e : row) {
            e = Rational(static_cast<long>(gen() % 19) - 9, static_cast<long>(gen() % 7) + 1);
            e.canonicalize();
        }
    return m;
}

RationalMatrix product(const RationalMatrix& a, const RationalMatrix& b)
{
    RationalMatrix out(a.size(), std::vector<Rational>(b.front().size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.front().size(); ++j)
            for (std::size_t l = 0; l < b.size(); ++l)
                out[i][j] += a[i][l] * b[l][j];
    return out;
}

std::vector<Rational> ones(int k) { return std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)); }

}  // namespace

TEST_CASE("determinant")
{
    CHECK(determinant({}) == 1);
    CHECK(determinant({{Rational(1, 2), 1}, {3, 4}}) == Rational(-1));
    CHECK_THROWS_AS(determinant({{1, 2}}), std::invalid_argument);
}

TEST_CASE("Cauchy-Binet examples")
{
    const RationalMatrix id{{1, 0}, {0, 1}};
    CHECK(cauchy_binet(id, id) == 1);
    const RationalMatrix a{{1, 2, 0}, {0, 1, 3}};
    const RationalMatrix b{{1, 0}, {2, 1}, {Rational(1, 2), 4}};
    CHECK(cauchy_binet(a, b) == determinant(product(a, b)));
    CHECK_THROWS_AS(cauchy_binet(b, a), std::invalid_argument);
}

TEST_CASE("Cauchy-Binet equals det(AB) on random rational matrices")
{
    std::mt19937_64 gen(99);
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= n; ++m)
            for (int trial = 0; trial < 5; ++trial) {
                const auto a = random_matrix(gen, m, n);
                const auto b = random_matrix(gen, n, m);
                REQUIRE(cauchy_binet(a, b) == determinant(product(a, b)));
                if (m == n)
                    CHECK(cauchy_binet(a, b) == determinant(a) * determinant(b));
            }
}

TEST_CASE("symmetric functions")
{
    const std::vector<Rational> x{Rational(1, 2), Rational(1, 3)};
    CHECK(complete_homogeneous(0, x) == 1);
    CHECK(complete_homogeneous(2, x) == Rational(1, 4) + Rational(1, 6) + Rational(1, 9));
    CHECK(elementary(2, x) == Rational(1, 6));
    CHECK(elementary(3, x) == 0);
    CHECK(complete_homogeneous(-1, x) == 0);
    CHECK(schur_polynomial(Partition({1}), x) == Rational(5, 6));
    CHECK(schur_polynomial(Partition({2, 1}), ones(2)) == 2);
    CHECK(schur_polynomial(Partition({1, 1, 1}), x) == 0);
    CHECK_THROWS_AS(schur_polynomial(Partition({1, 1, 1}), x, 2), std::invalid_argument);
}

TEST_CASE("Schur polynomial at ones is the hook-content count")
{
    for (int k = 1; k <= 4; ++k)
        for (int w = 0; w <= 8; ++w)
            for (const auto& p : partitions(w, w))
                REQUIRE(schur_polynomial(p, ones(k)) == Rational(semistandard_tableaux_count(p, k)));
}

TEST_CASE("gessel_check examples")
{
    const VariableAssignment one({Rational(1, 2)}, {Rational(1, 3)});
    const auto g = gessel_check(1, one, 30);
    CHECK(g.schur_side == doctest::Approx(1.0 / (1.0 - 1.0 / 6.0)).epsilon(1e-12));
    CHECK(g.residual <= g.tail_bound + 1e-14);
    const VariableAssignment empty({}, {Rational(1, 2)});
    for (int n = 0; n <= 3; ++n) {
        const auto e = gessel_check(n, empty, 5);
        CHECK(e.schur_side == 1.0);
        CHECK(e.toeplitz_side == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(gessel_check(2, VariableAssignment({Rational(9, 10)}, {Rational(9, 10)}), 3), TailNotConverged);
    CHECK_THROWS_AS(VariableAssignment({Rational(1)}, {}), std::invalid_argument);
}

TEST_CASE("gessel residual within the tail bound")
{
    const std::vector<std::vector<Rational>> pool{
        {Rational(1, 2)}, {Rational(1, 3), Rational(-1, 4)}, {Rational(2, 5), Rational(1, 5)}};
    for (const auto& x : pool)
        for (const auto& y : pool)
            for (int n = 1; n <= 4; ++n)
                for (auto variant : {GesselVariant::Standard, GesselVariant::Dual, GesselVariant::Mixed}) {
                    const auto g = gessel_check(n, VariableAssignment(x, y), 24, variant, 1e-4);
                    CHECK(g.residual <= g.tail_bound + 1e-13);
                }
}

TEST_CASE("Cauchy limit")
{
    const VariableAssignment half({Rational(1, 2)}, {Rational(1, 2)});
    const auto r = cauchy_limit_check(half, 6);
    CHECK(r.limit == doctest::Approx(4.0 / 3.0));
    CHECK(r.monotone);
    CHECK(r.errors.back() < 1e-12);

    const auto e = cauchy_limit_check(VariableAssignment({}, {Rational(1, 3)}), 4);
    for (double d : e.determinants)
        CHECK(d == doctest::Approx(1.0));

    const VariableAssignment two({Rational(1, 2), Rational(-1, 3)}, {Rational(1, 4), Rational(2, 5)});
    const auto dual = cauchy_limit_check(two, 6, GesselVariant::Mixed);
    CHECK(dual.limit == doctest::Approx((1 + 0.125) * (1 + 0.2) * (1 - 1.0 / 12) * (1 - 2.0 / 15)));
    CHECK(dual.monotone);
    CHECK(dual.errors.back() < 1e-12);

    const auto std2 = cauchy_limit_check(two, 8);
    CHECK(std2.monotone);
    CHECK(std2.errors.back() < 1e-12);
}

TEST_CASE("symbol coefficients are convolutions of h sequences")
{
    const VariableAssignment v({Rational(1, 2)}, {Rational(1, 3)});
    const SymbolCoefficients a(v, GesselVariant::Standard);
    // A_i = x^i / (1 - xy) for i >= 0.
    CHECK(a(0) == doctest::Approx(1.2));
    CHECK(a(2) == doctest::Approx(0.3));
    CHECK(a(-1) == doctest::Approx(0.4));
    const SymbolCoefficients d(v, GesselVariant::Dual);
    CHECK(d(0) == doctest::Approx(1.0 + 1.0 / 6));
    CHECK(d(1) == doctest::Approx(0.5));
    CHECK(d(2) == doctest::Approx(0.0));
}
