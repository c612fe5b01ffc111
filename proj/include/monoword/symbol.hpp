#pragma once

// The three Toeplitz symbols:
//   I:  e^{t/z} (1+z)^k
//   D:  e^{t/z} (1-z)^{-k}
//   P:  e^{t(z+1/z)}
// and their Fourier coefficients in double precision.

#include <string>

namespace monoword {

enum class SymbolKind { I, D, P };

std::string symbol_name(SymbolKind kind);
SymbolKind parse_symbol_kind(const std::string& tag);

// Generalized binomial coefficient a(a-1)...(a-q+1)/q! for real a; zero for q < 0.
double generalized_binomial(double a, int q);

// f_j(t) for the given symbol. For I and D the exponent k may be any real
// number; I with a nonnegative integer k is a finite sum, every other case is
// summed until the factorially decaying tail drops below machine precision.
double fourier_coefficient(SymbolKind kind, double k, double t, int j);

}  // namespace monoword
