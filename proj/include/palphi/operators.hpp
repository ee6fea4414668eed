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

#ifndef PALPHI_OPERATORS_HPP
#define PALPHI_OPERATORS_HPP

#include <vector>

#include "palphi/polynomials.hpp"

namespace palphi {

/// The linear operator Phi_D mapping palindromic polynomials of index d to
/// index d+2D-2, characterized by
///
///     (x-1)^2 Phi_D(P)(x) = (x^{d+2D} + 1) P(1) - 2 x^D P(x).
///
/// The quotient on the right is exact for palindromic P. For D = 0 on index
/// d <= 1 the operator is identically zero and the zero polynomial of index 0
/// is returned (the basis formula evaluates to 0 there; the quotient path
/// would need a negative output index, so it is bypassed).
PalPoly phi(const PalPoly& p, int d_param);

/// Image of the basis element x^i + x^{d-i} under Phi_D:
///
///     2 (1 - x^{i+D}) (1 - x^{d+D-i}) / (1-x)^2,
///
/// a polynomial with nonnegative integer coefficients, palindromic of index
/// d+2D-2. Pre: 0 <= i <= d.
PalPoly phi_basis(int i, int d, int d_param);

/// Phi_D computed by decomposing P in the basis {x^i + x^{d-i}}; the middle
/// term of an even-index polynomial enters with weight 1/2 since x^{d/2} is
/// half of x^{d/2} + x^{d/2}. Exists to cross-validate the quotient path.
PalPoly phi_via_basis(const PalPoly& p, int d_param);

/// True iff the quotient path and the basis path agree coefficient by
/// coefficient.
bool phi_agreement_check(const PalPoly& p, int d_param);

struct PhiOrbit {
    /// [P, Phi_D(P), ..., Phi_D^k(P)] with k <= steps.
    std::vector<PalPoly> iterates;
    /// True when the orbit reached the zero polynomial before exhausting
    /// steps (only possible for D = 0); the zero iterate is included.
    bool hit_zero = false;
};

/// Pre: steps >= 0.
PhiOrbit iterate_phi(const PalPoly& p, int d_param, int steps);

/// The final-value map: the constant term of Phi_0^max(P), where Phi_0^max is
/// the last power of Phi_0 that is not identically zero on the index-d space,
/// i.e. floor(d/2) applications. Inputs annihilated along the way (such as
/// x^d + 1, which Phi_0 kills) map to 0, which keeps the map linear.
Rational rho(const PalPoly& p);

}  // namespace palphi

#endif
