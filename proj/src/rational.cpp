#include "monoword/rational.hpp"

#include <stdexcept>

namespace monoword {

BigInt factorial(unsigned long n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(long n, long r)
{
    if (n < 0)
        throw std::invalid_argument("binomial: negative upper index");
    if (r < 0 || r > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

std::string to_fraction_string(const Rational& q)
{
    Rational c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& text)
{
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

}  // namespace monoword
