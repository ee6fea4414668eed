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

#include "palphi/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "palphi/errors.hpp"

namespace palphi {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("rational_from_string: malformed rational '" + std::string(text) + "'");
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("rational_from_string: zero denominator in '" + std::string(text) + "'");
    return make_rational(n, d);
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw NonInteger("to_integer: " + rational_to_string(q) + " is not an integer");
    return q.get_num();
}

double to_double_nearest(const Rational& q) {
    const int s = sgn(q);
    if (s == 0) return 0.0;
    Integer num = abs(Integer(q.get_num()));
    Integer den = q.get_den();
    const long ln = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    const long ld = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    // Scale so the integer quotient carries 53..55 significant bits.
    const long shift = 54 - (ln - ld);
    if (shift > 0)
        num <<= shift;
    else
        den <<= -shift;
    Integer quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    long bits = static_cast<long>(mpz_sizeinbase(quo.get_mpz_t(), 2));
    long drop = bits - 53;
    if (drop > 0) {
        const bool sticky = rem != 0;
        Integer mask = (Integer(1) << drop) - 1;
        Integer low = quo & mask;
        quo >>= drop;
        Integer half = Integer(1) << (drop - 1);
        if (low > half || (low == half && (sticky || mpz_odd_p(quo.get_mpz_t()))))
            quo += 1;
    } else if (rem != 0) {
        // Quotient already at 53 bits; decide the last ulp against the true tail.
        Integer twice = rem * 2;
        const int c = cmp(twice, den);
        if (c > 0 || (c == 0 && mpz_odd_p(quo.get_mpz_t()))) quo += 1;
    }
    double mant = quo.get_d();  // <= 2^53, exact
    double value = std::ldexp(mant, static_cast<int>(drop > 0 ? drop - shift : -shift));
    return s < 0 ? -value : value;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer pow2(unsigned long k) { return Integer(1) << k; }

bool divides(const Integer& d, const Integer& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace palphi
