#ifndef BIMONO_RATIONAL_HPP
#define BIMONO_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bimono {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q"; throws Error(invalid_input) otherwise.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

/// Generalized binomial coefficient C(r, k) for rational r.
Rational binomial(const Rational& r, unsigned k);

inline Rational pow(const Rational& base, unsigned exponent) {
    Rational out(1);
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

} // namespace bimono

#endif
