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

#ifndef PALPHI_SEQUENCES_HPP
#define PALPHI_SEQUENCES_HPP

#include <string>
#include <utility>
#include <vector>

#include "palphi/operators.hpp"
#include "palphi/polynomials.hpp"

namespace palphi {

/// A named exact integer/rational sequence, aligned by its first index.
struct SequenceTable {
    std::string name;
    long offset = 0;
    std::vector<Rational> values;
};

/// Poupard polynomial F_n: the Phi_2 orbit of 1, so F_{n+1} = Phi_2(F_n) with
/// F_1 = 1; index 2n-2. Orbits are memoized behind a mutex (insert-if-absent),
/// so concurrent callers are safe. Pre: n >= 1.
PalPoly poupard(int n);

/// Kreweras polynomial G_n: the Phi_2 orbit of 1+x; index 2n-1. Memoized as
/// above. Pre: n >= 1.
PalPoly kreweras(int n);

/// Bernoulli number B_n, computed by the Akiyama-Tanigawa scheme. Convention:
/// B_1 = -1/2 (all other odd-index values vanish; the formulas downstream use
/// |B_{2n}| only, so the convention never leaks out).
Rational bernoulli(int n);

/// Reduced tangent number 2^n (2^{2n} - 1) |B_{2n}| / n. Throws NonInteger if
/// the expression fails to be integral (which would indicate a bernoulli bug).
Integer reduced_tangent(int n);

/// Genocchi number 2 (2^{2n} - 1) |B_{2n}|.
Integer genocchi(int n);

/// The Kreweras quotient 2^{1-n} G_n / (x+1), palindromic of index 2n-2.
/// Both divisions are checked and throw NotDivisible naming the failing
/// divisor; the divisibility by 2^{n-1} is a theorem being re-verified here,
/// not an assumption.
PalPoly kreweras_reduced(int n);

/// Final-value generating polynomials in the variable t:
///   Q_n(t) = sum_{i=0}^{2n+1} rho((x^i - x^{2n+1-i})/(x-1)) t^i,
///   P_n(t) = Q_n(t)/(t-1).
/// The quotient is exact because Q_n(1) = 0 by antisymmetry; a nonzero
/// remainder throws NotDivisible. P_n is expected to equal poupard(n+1).
std::pair<DensePoly, PalPoly> rho_triangle_Q(int n);

/// Analogous odd construction: Q'_n(t) from rho((x^i - x^{2n-i})/(x-1)) and
/// its exact quotient by (t-1), palindromic of odd index 2n-1; expected to
/// equal kreweras(n). Pre: n >= 1.
PalPoly rho_triangle_Qprime(int n);

enum class Parity { Even, Odd };

/// rho(2^{-j} (1+x)^{2j}) for Parity::Even, rho(2^{-j} (1+x)^{2j+1}) for
/// Parity::Odd. The even values are Euler numbers, the odd values their
/// x/cos(x) companions.
Rational euler_via_rho(int j, Parity parity);

struct Phi1Index2Table {
    SequenceTable constants;
    SequenceTable middles;
};

/// Iterates Phi_1 from x (index 2) for the given number of steps and returns
/// the streams of constant terms and middle coefficients. Pre: steps >= 1.
Phi1Index2Table phi1_index2_table(int steps);

/// a_k = 4 a_{k-1} - 2 a_{k-2} for every k >= 2 of the table.
bool satisfies_phi1_recurrence(const SequenceTable& table);

struct SalieTable {
    int rows = 0;
    int cols = 0;
    /// entries[i][j] = constant term of Phi_2^j(x^i (x+1)) divided by 2^j.
    std::vector<std::vector<Rational>> entries;
    /// Cells where 2^j failed to divide exactly (would contradict the
    /// power-of-two lemma, since x^i (x+1) has odd index). Flagged, not fatal.
    std::vector<std::pair<int, int>> non_integral;
};

/// Pre: rows, cols >= 1.
SalieTable salie_table(int rows, int cols);

/// x^i (1+x)^j as a palindromic polynomial of index 2i+j.
PalPoly monomial_times_binomial_power(int i, int j);

}  // namespace palphi

#endif
