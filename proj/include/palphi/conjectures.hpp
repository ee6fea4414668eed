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

#ifndef PALPHI_CONJECTURES_HPP
#define PALPHI_CONJECTURES_HPP

#include <vector>

#include "palphi/polynomials.hpp"

namespace palphi {

struct DivisibilityResult {
    bool holds = false;
    Rational rho_value;
    /// rho(x^i (1+x)^j) / 2^{floor(j/2)}, whatever its integrality.
    Rational quotient;
};

/// The 2-adic divisibility conjecture at a single cell: is rho(x^i (1+x)^j)
/// divisible by 2^{floor(j/2)}? For odd j this is a theorem (the input has
/// odd index); for even j it is genuinely open. Pre: i, j >= 0.
DivisibilityResult rho_divisibility(int i, int j);

/// n x n integer matrix with entries rho(x^i (1+x)^j) 2^{-floor(j/2)} for
/// 0 <= i, j <= n-1. Entry integrality is exactly the divisibility
/// conjecture; a failure throws DivisibilityCounterexample carrying (i, j).
struct RhoMatrix {
    int n = 0;
    std::vector<std::vector<Integer>> entries;
};

RhoMatrix build_M(int n);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

struct DetCheck {
    Integer det;
    Integer predicted;
    bool match = false;
};

/// Compares det M_n with the conjectured product
/// prod_{k=1}^{n-1} (n-k)!^{eps(k)}, eps(k) = 2 for odd k, 4 for even k.
DetCheck det_check(int n);

struct Counterexample {
    int i = 0;
    int j = 0;
    Rational rho_value;
};

struct DivisibilitySweep {
    int max_i = 0;
    int max_j = 0;
    long checked = 0;
    std::vector<Counterexample> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

/// Sweeps the divisibility conjecture over 0 <= i <= max_i, 0 <= j <= max_j.
/// Counterexamples are collected, never thrown: a failed cell is a first-class
/// finding.
DivisibilitySweep divisibility_sweep(int max_i, int max_j);

}  // namespace palphi

#endif
