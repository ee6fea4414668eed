/*
   Copyright 2026 The palphi authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PALPHI_RATIONAL_HPP
#define PALPHI_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace palphi {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, kept in canonical form: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1. GMP maintains the canonical form through arithmetic;
/// every construction path below canonicalizes explicitly.
using Rational = mpq_class;

/// Builds a canonical rational from numerator and denominator.
/// Throws std::invalid_argument on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (arbitrary precision). Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational rational_from_string(std::string_view text);

/// Renders as "p" when integral, else "p/q".
std::string rational_to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Exact integer value. Pre: is_integer(q).
Integer to_integer(const Rational& q);

/// Nearest double (ties to even). Exact integer rounding on the significand,
/// so the result is the correctly rounded value of num/den for results in the
/// normal range; overflow saturates to +/-inf, deep underflow to 0.
double to_double_nearest(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer pow2(unsigned long k);

/// True iff d divides n exactly (d != 0).
bool divides(const Integer& d, const Integer& n);

}  // namespace palphi

#endif
