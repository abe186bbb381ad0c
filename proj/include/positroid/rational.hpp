#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace positroid {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q" with q > 0, always including the denominator.
std::string to_string(const Rational& q);

// Accepts "p/q", "p" or a decimal integer with sign.
Rational parse_rational(std::string_view text);

inline int sign_of(const Rational& q) { return sgn(q); }

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace positroid
