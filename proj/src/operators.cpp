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

#include "palphi/operators.hpp"

#include <stdexcept>
#include <string>

namespace palphi {

PalPoly phi(const PalPoly& p, int d_param) {
    if (d_param < 0) throw std::invalid_argument("phi: D must be nonnegative");
    const int d = p.index();
    if (d_param == 0 && d <= 1) return PalPoly::zero(0);
    const int out_index = d + 2 * d_param - 2;
    const Rational sum = p.at_one();
    // (x^{d+2D} + 1) P(1) - 2 x^D P(x)
    std::vector<Rational> rhs(static_cast<size_t>(d + 2 * d_param) + 1, Rational(0));
    rhs.front() += sum;
    rhs.back() += sum;
    for (int j = 0; j <= d; ++j) rhs[static_cast<size_t>(d_param + j)] -= 2 * p.coeff(j);
    DensePoly quotient = exact_quotient_by_square(DensePoly(std::move(rhs)));
    return palpoly_from_dense(quotient, out_index);
}

PalPoly phi_basis(int i, int d, int d_param) {
    if (d_param < 0) throw std::invalid_argument("phi_basis: D must be nonnegative");
    if (i < 0 || i > d) throw std::invalid_argument("phi_basis: need 0 <= i <= d");
    const int a = i + d_param;
    const int b = d + d_param - i;
    if (a == 0 || b == 0) return PalPoly::zero(std::max(d + 2 * d_param - 2, 0));
    // 2 * (1 + x + ... + x^{a-1}) (1 + x + ... + x^{b-1})
    std::vector<Rational> c(static_cast<size_t>(a + b) - 1, Rational(0));
    for (int s = 0; s < a; ++s)
        for (int t = 0; t < b; ++t) c[static_cast<size_t>(s + t)] += 2;
    return PalPoly(std::move(c), d + 2 * d_param - 2);
}

PalPoly phi_via_basis(const PalPoly& p, int d_param) {
    const int d = p.index();
    if (d_param == 0 && d <= 1) return PalPoly::zero(0);
    const int out_index = d + 2 * d_param - 2;
    PalPoly acc = PalPoly::zero(out_index);
    for (int i = 0; 2 * i <= d; ++i) {
        Rational w = p.coeff(i);
        if (2 * i == d) w /= 2;
        if (w == 0) continue;
        PalPoly image = phi_basis(i, d, d_param);
        if (image.is_zero()) continue;
        acc = add(acc, scale(w, image));
    }
    return acc;
}

bool phi_agreement_check(const PalPoly& p, int d_param) {
    return phi(p, d_param) == phi_via_basis(p, d_param);
}

PhiOrbit iterate_phi(const PalPoly& p, int d_param, int steps) {
    if (steps < 0) throw std::invalid_argument("iterate_phi: steps must be nonnegative");
    PhiOrbit orbit;
    orbit.iterates.reserve(static_cast<size_t>(steps) + 1);
    orbit.iterates.push_back(p);
    for (int k = 0; k < steps; ++k) {
        PalPoly next = phi(orbit.iterates.back(), d_param);
        const bool zero = next.is_zero();
        orbit.iterates.push_back(std::move(next));
        if (zero) {
            orbit.hit_zero = true;
            break;
        }
    }
    return orbit;
}

Rational rho(const PalPoly& p) {
    PalPoly cur = p;
    const int applications = p.index() / 2;
    for (int k = 0; k < applications; ++k) {
        if (cur.is_zero()) return Rational(0);
        cur = phi(cur, 0);
    }
    return cur.coeff(0);
}

}  // namespace palphi
