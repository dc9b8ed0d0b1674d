#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rdiag {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". The result is canonicalized; q = 0 is rejected.
Rational parse_rational(std::string_view text);

/// "p/q" form; integers are written as "p/1" so the format is uniform.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt binomial(unsigned long n, unsigned long k);
BigInt catalan(unsigned long n);
BigInt factorial(unsigned long n);

/// value^exponent for a non-negative exponent.
Rational pow(const Rational& value, unsigned long exponent);

}  // namespace rdiag
