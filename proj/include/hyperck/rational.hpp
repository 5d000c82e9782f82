#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperck {

// Arbitrary-precision rational. All arithmetic in the library is exact.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (q != 0) into canonical form.
// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q" form, q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& q);

Integer factorial(unsigned n);

// n!! with the conventions 0!! = (-1)!! = 1.
Integer double_factorial(int n);

}  // namespace hyperck
