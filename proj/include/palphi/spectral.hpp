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

#ifndef PALPHI_SPECTRAL_HPP
#define PALPHI_SPECTRAL_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "palphi/polynomials.hpp"

namespace palphi {

/// k-th cyclotomic polynomial, by exact division of x^k - 1 by the lower
/// cyclotomics; integer coefficients. Memoized. Pre: k >= 1.
DensePoly cyclotomic(int k);

/// The field Q(zeta_L) presented as Q[x] / cyclotomic(L). Shared by all
/// elements built over it.
struct CycloField {
    int level = 1;        // L
    DensePoly modulus;    // cyclotomic(L), monic
    int degree = 1;       // deg modulus = phi(L)
};

using CycloFieldPtr = std::shared_ptr<const CycloField>;

CycloFieldPtr make_cyclo_field(int level);

/// Element of Q(zeta_L), stored as its reduced representative of degree
/// < phi(L). All arithmetic is exact field arithmetic.
class CycloElem {
   public:
    CycloElem(CycloFieldPtr field, DensePoly rep);

    static CycloElem zero(CycloFieldPtr field);
    static CycloElem one(CycloFieldPtr field);
    static CycloElem from_rational(CycloFieldPtr field, const Rational& q);
    /// zeta_L itself.
    static CycloElem zeta(CycloFieldPtr field);

    const DensePoly& rep() const { return rep_; }
    const CycloFieldPtr& field() const { return field_; }
    bool is_zero() const { return rep_.is_zero(); }

    CycloElem operator-() const;
    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const Rational& s, const CycloElem& a);
    friend bool operator==(const CycloElem& a, const CycloElem& b);

    /// Multiplicative inverse by the extended Euclidean algorithm against the
    /// cyclotomic modulus. Throws std::domain_error on zero.
    CycloElem inverse() const;
    CycloElem pow(long e) const;

    /// Numeric embedding zeta_L -> exp(2 pi i / L).
    std::complex<double> embed() const;

   private:
    CycloFieldPtr field_;
    DensePoly rep_;
};

/// Parameters of the sinus polynomial S_{m,n} = (x^{mn}+1)/(x^2 - 2cx + 1)
/// with c = cos(pi/n); m odd >= 1, n >= 2.
struct SinusSpec {
    int m = 1;
    int n = 2;
};

/// Exact S_{m,n} over Q(zeta_{2n}): coefficients u_k generated by the
/// Chebyshev-style recurrence u_0 = 1, u_1 = 2c, u_{k+1} = 2c u_k - u_{k-1},
/// which equals sin((k+1)pi/n)/sin(pi/n) exactly. Before returning, the
/// defining identity (x^2 - 2cx + 1) S = x^{mn} + 1 is re-verified in the
/// field; failure throws ValidationFailed.
std::vector<CycloElem> sinus_poly_exact(const SinusSpec& spec);

struct EigenCheckResult {
    bool ok = false;
    /// Coefficient position of the first mismatch, or -1.
    int first_mismatch = -1;
    std::string detail;
    /// (1 - c) S(1) as a reduced field element (must be 1).
    bool eigenvalue_identity = false;
};

/// Machine verification that S_{m,n} is an eigenvector of Phi_1 with
/// eigenvalue 1/(1 - cos(pi/n)): computes Phi_1(S) with exact cyclotomic
/// coefficients and asserts (1-c) Phi_1(S) = S coefficient-by-coefficient,
/// plus the identity (1-c) S(1) = 1 (the eigenvalue equals S(1)).
EigenCheckResult eigencheck_detailed(const SinusSpec& spec);
bool eigencheck(const SinusSpec& spec);

/// Double-precision twin: coefficients sin((k+1)pi/n)/sin(pi/n).
std::vector<double> sinus_poly_numeric(const SinusSpec& spec);

struct ProfileReport {
    int d_param = 0;
    int delta = 0;  // 2D - 2
    /// Orbit indices actually used (each requested checkpoint is mapped to
    /// the first reachable index >= it).
    std::vector<long> checkpoints;
    /// Per checkpoint: sup_k | (H_{n,k} - H_{n,0}) n / alpha_n  -  Psi(k/n) |
    /// with alpha_n = H_{n+delta,0} and Psi(x) = (pi/2) sin(pi x).
    std::vector<double> sup_deviation;
    double e_estimate = 0.0;
    double b_estimate = 0.0;
    double c_estimate = 0.0;
    /// Checkpoints included in the least-squares window (last half, min 3).
    std::vector<long> fit_window;
};

/// Iterates Phi_D from the seed until the index passes n_target, measures the
/// normalized coefficient profile against (pi/2) sin(pi x) at each checkpoint
/// and fits log(H_{n+delta}(0)/H_n(0)) ~ delta*E*log n + const over the fit
/// window for the growth estimates. The second-order (1/n) fit behind
/// c_estimate is reported without any acceptance gate.
/// Pre: D >= 2; seed nonnegative, nonzero.
ProfileReport asympt_profile(int d_param, const PalPoly& seed, long n_target, std::vector<long> checkpoints);

}  // namespace palphi

#endif
