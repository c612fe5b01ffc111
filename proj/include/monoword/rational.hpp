#pragma once

#include <gmpxx.h>

#include <string>

namespace monoword {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);

// C(n, r) for integer n >= 0; zero when r < 0 or r > n.
BigInt binomial(long n, long r);

// Renders as "p/q" (always with a denominator, "1/1" for one).
std::string to_fraction_string(const Rational& q);

Rational parse_fraction(const std::string& text);

}  // namespace monoword
