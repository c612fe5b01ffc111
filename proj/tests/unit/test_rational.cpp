#include "doctest.h"

#include "monoword/rational.hpp"

using namespace monoword;

TEST_CASE("factorial and binomial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 1), std::invalid_argument);
    for (long n = 1; n < 30; ++n)
        for (long r = 1; r <= n; ++r)
            CHECK(binomial(n, r) == binomial(n - 1, r) + binomial(n - 1, r - 1));
}

TEST_CASE("fraction text round trip")
{
    CHECK(to_fraction_string(Rational(1, 4)) == "1/4");
    CHECK(to_fraction_string(Rational(0)) == "0/1");
    CHECK(to_fraction_string(Rational(6, 3)) == "2/1");
    CHECK(to_fraction_string(Rational(-3, 9)) == "-1/3");
    CHECK(parse_fraction("3/4") == Rational(3, 4));
    CHECK(parse_fraction("6/8") == Rational(3, 4));
    CHECK(parse_fraction("7") == Rational(7));
    CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("abc"), std::invalid_argument);
    Rational q(-123456789, 987654);
    q.canonicalize();
    CHECK(parse_fraction(to_fraction_string(q)) == q);
}
