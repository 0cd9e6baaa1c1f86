#pragma once

// Exact scalar types. Every exact path in the library goes through these.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tpb {

// GMP keeps mpq values canonical (gcd(num, den) = 1, den > 0) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational abs(const Rational& q) { return ::abs(q); }

Rational pow(const Rational& base, unsigned exponent);

// Parses "P/Q", "P" or a plain decimal such as "0.25" / "-1.5e-3".
Rational parse_rational(std::string_view text);

// "P/Q", or "P" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// floor(log10(|q|)) for q != 0.
long decimal_exponent(const Rational& q);

Integer pow10(unsigned exponent);

}  // namespace tpb
