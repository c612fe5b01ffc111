#include "doctest.h"

#include "monoword/series.hpp"

#include <algorithm>
#include <numeric>

using namespace monoword;

namespace {

// Permutations of 1..N with longest increasing subsequence <= n.
std::vector<Rational> permutation_cdf(int N)
{
    std::vector<int> p(static_cast<std::size_t>(N));
    std::iota(p.begin(), p.end(), 1);
    std::vector<long> count(static_cast<std::size_t>(N) + 1, 0);
    do {
        std::vector<int> tails;
        for (int v : p) {
            auto it = std::lower_bound(tails.begin(), tails.end(), v);
            if (it == tails.end())
                tails.push_back(v);
            else
                *it = v;
        }
        count[tails.size()]++;
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<Rational> cdf;
    long acc = 0;
    for (long c : count) {
        acc += c;
        cdf.emplace_back(acc);
    }
    return cdf;
}

}  // namespace

TEST_CASE("series arithmetic")
{
    const RationalSeries a({1, 1});
    const auto inv = a.truncated(5).inverse();
    for (int i = 0; i <= 5; ++i)
        CHECK(inv[i] == (i % 2 ? -1 : 1));
    const auto prod = RationalSeries({1, 2, 3}) * RationalSeries({1, 1});
    CHECK(prod.order() == 1);
    CHECK(prod[1] == 3);
    const auto q = RationalSeries({2, 4, 6}) / RationalSeries({2, 0, 0});
    CHECK(q == RationalSeries({1, 2, 3}));
    CHECK(RationalSeries({1, 2, 3}).derivative() == RationalSeries({2, 6}));
    CHECK(RationalSeries({0, 0}).is_zero());
    CHECK(RationalSeries({1, Rational(1, 2)}).evaluate(2.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(RationalSeries({0, 1}).inverse(), std::domain_error);
    CHECK(RationalSeries::monomial(2, 3, 4)[2] == 3);
    CHECK(RationalSeries::constant(5, 3)[0] == 5);
}

TEST_CASE("symbol coefficients")
{
    for (int k = 1; k <= 4; ++k)
        CHECK(symbol_coefficient({SymbolKind::I, k}, k, 6) == RationalSeries::constant(1, 6));
    CHECK(symbol_coefficient({SymbolKind::I, 1}, 0, 4) == RationalSeries({1, 1, 0, 0, 0}));
    CHECK(symbol_coefficient({SymbolKind::I, 1}, -1, 4) == RationalSeries({0, 1, Rational(1, 2), 0, 0}));
    CHECK(symbol_coefficient({SymbolKind::I, 2}, 3, 4).is_zero());
    // D: C(k+j+m-1, j+m)/m!; k=1 gives e^t shifted.
    const auto d = symbol_coefficient({SymbolKind::D, 1}, 0, 3);
    CHECK(d == RationalSeries({1, 1, Rational(1, 2), Rational(1, 6)}));
    // P: I_j(2t) power series, j = 1: t + t^3/2.
    const auto p = symbol_coefficient({SymbolKind::P, 0}, 1, 4);
    CHECK(p == RationalSeries({0, 1, 0, Rational(1, 2), 0}));
}

TEST_CASE("determinant series")
{
    CHECK(toeplitz_det_series(0, {SymbolKind::I, 3}, 5) == RationalSeries::constant(1, 5));
    CHECK(toeplitz_det_series(1, {SymbolKind::I, 1}, 5) == RationalSeries({1, 1, 0, 0, 0, 0}));
    // f_0^2 - f_1 f_{-1} with f_1 = 1: (1+t)^2 - (t + t^2/2).
    CHECK(toeplitz_det_series(2, {SymbolKind::I, 1}, 5) == RationalSeries({1, 1, Rational(1, 2), 0, 0, 0}));
    for (auto kind : {SymbolKind::I, SymbolKind::D, SymbolKind::P})
        for (int n = 0; n <= 4; ++n)
            CHECK(toeplitz_det_series(n, {kind, 3}, 6)[0] == 1);
}

TEST_CASE("extraction examples")
{
    const auto det = toeplitz_det_series(1, {SymbolKind::I, 1}, 6);
    CHECK(extract_distribution(det, 1, 0) == 1);
    CHECK(extract_distribution(det, 1, 1) == 1);
    for (int N = 2; N <= 6; ++N)
        CHECK(extract_distribution(det, 1, N) == 0);
    CHECK(extract_distribution(1, 2, Statistic::WeaklyIncreasing, 2) == Rational(1, 4));
    CHECK(extract_distribution(1, 2, Statistic::StrictlyDecreasing, 2) == Rational(3, 4));
    CHECK_THROWS_AS(extract_distribution(det, 1, 7), std::out_of_range);
    CHECK_THROWS_AS(extract_distribution(1, 2, Statistic::WeaklyIncreasing, 13, 12), std::out_of_range);
}

TEST_CASE("series route equals enumeration")
{
    for (int k = 1; k <= 3; ++k)
        for (auto which : {Statistic::WeaklyIncreasing, Statistic::StrictlyDecreasing}) {
            for (int n = 1; n <= 4; ++n) {
                const auto det = toeplitz_det_series(
                    n, {which == Statistic::WeaklyIncreasing ? SymbolKind::I : SymbolKind::D, k}, 8);
                for (int N = 0; N <= 8; ++N) {
                    const auto e = exact_distribution_enumeration(k, N, which);
                    REQUIRE(extract_distribution(det, k, N) == e.at(n));
                }
            }
        }
}

TEST_CASE("series route equals tableaux up to N = 30")
{
    for (int k = 1; k <= 4; ++k)
        for (auto which : {Statistic::WeaklyIncreasing, Statistic::StrictlyDecreasing})
            for (int n = 1; n <= 3; ++n) {
                const auto det = toeplitz_det_series(
                    n, {which == Statistic::WeaklyIncreasing ? SymbolKind::I : SymbolKind::D, k}, 30);
                for (int N : {9, 15, 22, 30})
                    REQUIRE(extract_distribution(det, k, N) == distribution_via_tableaux(n, k, N, which));
            }
    const auto table = distribution_table_via_series(3, 12, Statistic::WeaklyIncreasing);
    CHECK(table.route() == Route::Series);
    for (int n = 0; n <= 12; ++n)
        CHECK(table.at(n) == distribution_via_tableaux(n, 3, 12, Statistic::WeaklyIncreasing));
}

TEST_CASE("permutation symbol counts permutations")
{
    for (int N = 0; N <= 7; ++N) {
        const auto cdf = permutation_cdf(N);
        const Rational perms(factorial(static_cast<unsigned long>(N)));
        for (int n = 1; n <= N; ++n)
            REQUIRE(extract_permutation_distribution(n, N) * perms == cdf[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("decreasing route tends to the permutation value")
{
    for (int N = 1; N <= 6; ++N) {
        for (int n = 1; n < N; ++n) {
            const double target = extract_permutation_distribution(n, N).get_d();
            // The gap closes monotonically, like 1/k.
            double last = 1.0;
            for (int k : {8, 16, 32, 64}) {
                const double v = distribution_via_tableaux(n, k, N, Statistic::StrictlyDecreasing).get_d();
                const double err = std::abs(v - target);
                CHECK(err < last);
                if (k > 8)
                    CHECK(last / err == doctest::Approx(2.0).epsilon(0.25));
                last = err;
            }
            CHECK(64 * last < 2.0);
            const double series64 = extract_distribution(n, 64, Statistic::StrictlyDecreasing, N).get_d();
            CHECK(std::abs(series64 - target) == doctest::Approx(last).epsilon(1e-12));
        }
    }
}

TEST_CASE("sigma series")
{
    // n = k = 1: t^2/(1+t) = t^2 - t^3 + t^4 - ...
    const auto s = sigma_series(1, 1, 6);
    CHECK(s[0] == 0);
    CHECK(s[1] == 0);
    for (int i = 2; i <= 6; ++i)
        CHECK(s[i] == (i % 2 ? -1 : 1));
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            const auto sn = sigma_series(n, k, n + 2);
            for (int i = 0; i <= n; ++i)
                CHECK(sn[i] == 0);
            const Rational a = Rational(k * binomial(n + k, n)) / Rational(factorial(static_cast<unsigned long>(n + 1)));
            CHECK(sn[n + 1] == a);
        }
}
