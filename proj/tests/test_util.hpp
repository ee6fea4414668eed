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

#ifndef PALPHI_TEST_UTIL_HPP
#define PALPHI_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "palphi/polynomials.hpp"

namespace palphi::testing {

/// Random palindromic polynomial with nonnegative integer coefficients.
inline PalPoly random_nonneg_palpoly(std::mt19937& rng, int index, long max_coeff) {
    std::uniform_int_distribution<long> dist(0, max_coeff);
    std::vector<Rational> c(static_cast<size_t>(index) + 1, Rational(0));
    for (int j = 0; 2 * j <= index; ++j) {
        Rational v{dist(rng)};
        c[static_cast<size_t>(j)] = v;
        c[static_cast<size_t>(index - j)] = v;
    }
    return PalPoly(std::move(c), index);
}

/// As above but guaranteed to have a positive interior coefficient, so the
/// image under Phi_0 cannot vanish (x^d + 1 spans the kernel).
inline PalPoly random_nonneg_palpoly_interior(std::mt19937& rng, int index, long max_coeff) {
    PalPoly p = random_nonneg_palpoly(rng, index, max_coeff);
    if (index < 2) return p;
    bool interior = false;
    for (int j = 1; j < index; ++j)
        if (p.coeff(j) != 0) interior = true;
    if (interior) return p;
    std::vector<Rational> c(p.coeffs());
    std::uniform_int_distribution<long> pos(1, max_coeff);
    std::uniform_int_distribution<int> where(1, index / 2);
    const int j = where(rng);
    Rational v{pos(rng)};
    c[static_cast<size_t>(j)] = v;
    c[static_cast<size_t>(index - j)] = v;
    return PalPoly(std::move(c), index);
}

/// Random palindromic polynomial with rational coefficients of either sign.
inline PalPoly random_rational_palpoly(std::mt19937& rng, int index) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c(static_cast<size_t>(index) + 1, Rational(0));
    for (int j = 0; 2 * j <= index; ++j) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        c[static_cast<size_t>(j)] = v;
        c[static_cast<size_t>(index - j)] = v;
    }
    return PalPoly(std::move(c), index);
}

/// Random palindromic polynomial satisfying the concavity criterion by
/// construction: symmetric nonincreasing slopes integrated from a base value
/// large enough for the boundary inequality 2 p_0 >= p_1.
inline PalPoly random_concave_palpoly(std::mt19937& rng, int index) {
    std::uniform_int_distribution<long> jump(0, 6);
    const int half = index / 2;
    std::vector<long> slope(static_cast<size_t>(half) + 1, 0);
    long cur = jump(rng);
    for (int j = half; j >= 1; --j) {
        slope[static_cast<size_t>(j)] = cur;
        cur += jump(rng);
    }
    slope[0] = cur + jump(rng);  // ensured largest
    std::vector<long> p(static_cast<size_t>(index) + 1, 0);
    p[0] = slope[0] + static_cast<long>(jump(rng));  // 2 p_0 >= p_1 needs p_0 >= slope_1
    for (int j = 1; 2 * j <= index; ++j) p[static_cast<size_t>(j)] = p[static_cast<size_t>(j - 1)] + slope[static_cast<size_t>(j)];
    for (int j = 0; 2 * j < index; ++j) p[static_cast<size_t>(index - j)] = p[static_cast<size_t>(j)];
    std::vector<Rational> c(p.size());
    for (size_t k = 0; k < p.size(); ++k) c[k] = Rational(p[k]);
    return PalPoly(std::move(c), index);
}

}  // namespace palphi::testing

#endif
