#pragma once

// Airy function Ai and its derivative. |x| <= 10 uses the Maclaurin series in
// 320-bit floating point (the cancellation for positive x costs ~20 digits);
// beyond that the standard asymptotic expansions, truncated at their smallest term.

namespace monoword {

struct AiryValue {
    double ai = 0.0;
    double ai_prime = 0.0;
};

AiryValue airy(double x);
inline double airy_ai(double x) { return airy(x).ai; }
inline double airy_ai_prime(double x) { return airy(x).ai_prime; }

}  // namespace monoword
