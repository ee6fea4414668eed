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

#ifndef PALPHI_POLYNOMIALS_HPP
#define PALPHI_POLYNOMIALS_HPP

#include <utility>
#include <vector>

#include "palphi/errors.hpp"
#include "palphi/rational.hpp"

namespace palphi {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// order. The zero polynomial is the empty coefficient vector; otherwise the
/// leading coefficient is nonzero. Values are immutable after construction.
class DensePoly {
   public:
    DensePoly() = default;
    /// Strips trailing zero coefficients.
    explicit DensePoly(std::vector<Rational> coeffs);

    static DensePoly constant(const Rational& c);
    /// c * x^k
    static DensePoly monomial(const Rational& c, int k);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    const Rational& leading() const;

    /// Exact Horner evaluation.
    Rational eval(const Rational& t) const;

    DensePoly derivative() const;

    DensePoly operator-() const;
    friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(const Rational& s, const DensePoly& p);
    friend bool operator==(const DensePoly& a, const DensePoly& b) = default;

   private:
    std::vector<Rational> coeffs_;
};

/// Palindromic polynomial of explicit index d: the coefficient vector has
/// exactly d+1 entries, trailing zeros significant, and satisfies
/// coeffs[j] == coeffs[d-j]. The index is the sum of degree and valuation
/// (the polynomial x is stored as [0,1,0] with index 2), so it is carried
/// explicitly rather than inferred from the degree.
class PalPoly {
   public:
    /// Zero polynomial of index 0.
    PalPoly();
    /// Validates length and palindromicity; throws LengthMismatch /
    /// NotPalindromic.
    PalPoly(std::vector<Rational> coeffs, int index);

    /// Zero polynomial carrying the given index.
    static PalPoly zero(int index);

    int index() const { return index_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^j; zero outside 0..d (the p_{-1} = p_{d+1} = 0
    /// convention used by the concavity criterion).
    const Rational& coeff(int j) const;

    bool is_zero() const;
    /// Degree of the underlying polynomial (-1 for zero).
    int degree() const;
    /// Valuation (smallest exponent with nonzero coefficient); index+1 for zero.
    int valuation() const;

    /// Exact Horner evaluation.
    Rational eval(const Rational& t) const;
    /// Coefficient sum, i.e. eval at 1.
    Rational at_one() const;

    DensePoly dense() const;

    /// Equal only at the same index with the same coefficients.
    friend bool operator==(const PalPoly& a, const PalPoly& b) = default;

   private:
    std::vector<Rational> coeffs_;
    int index_ = 0;
};

/// Validated construction; the contract entry point.
PalPoly make_palpoly(std::vector<Rational> coeffs, int index);

/// Product of palindromic polynomials is palindromic of index d1+d2.
PalPoly mul(const PalPoly& a, const PalPoly& b);
/// Sum within one index space. Throws LengthMismatch on index disagreement.
PalPoly add(const PalPoly& a, const PalPoly& b);
PalPoly scale(const Rational& s, const PalPoly& p);

/// Interprets a dense polynomial as a palindromic polynomial of the given
/// index (pads with zeros up to index+1 entries). Throws if it is not.
PalPoly palpoly_from_dense(const DensePoly& p, int index);

/// Quotient and remainder of synthetic division by (x - r).
std::pair<DensePoly, Rational> divide_by_linear_root(const DensePoly& p, const Rational& r);

/// Exact quotient R with (x-1)^2 * R == q, by synthetic division at x=1
/// applied twice, each step checked for a zero remainder. A nonzero remainder
/// signals a broken caller invariant and throws NotDivisible.
DensePoly exact_quotient_by_square(const DensePoly& q);

/// Exact quotient num/den; throws NotDivisible if the division leaves a
/// remainder or den is zero.
DensePoly exact_divide(const DensePoly& num, const DensePoly& den);

/// Monic gcd over the rationals, computed with the subresultant remainder
/// sequence on primitive integer images to keep coefficient growth in check.
DensePoly gcd_monic(const DensePoly& a, const DensePoly& b);

/// Yun decomposition of the monic part: returns pairwise coprime square-free
/// monic factors A_i with multiplicities m_i such that
/// prod A_i^{m_i} = p / leading(p).
std::vector<std::pair<DensePoly, int>> squarefree_decomposition(const DensePoly& p);

}  // namespace palphi

#endif
