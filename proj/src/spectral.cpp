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

#include "palphi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "palphi/operators.hpp"

namespace palphi {

namespace {

std::mutex g_cyclo_mutex;

// Remainder of p modulo a monic divisor.
DensePoly poly_mod(const DensePoly& p, const DensePoly& modulus) {
    if (p.degree() < modulus.degree()) return p;
    std::vector<Rational> rem(p.coeffs());
    const auto& m = modulus.coeffs();
    for (int k = static_cast<int>(rem.size()) - 1; k >= modulus.degree(); --k) {
        Rational f = rem[static_cast<size_t>(k)];
        if (f == 0) continue;
        rem[static_cast<size_t>(k)] = 0;
        for (int j = 0; j < modulus.degree(); ++j)
            rem[static_cast<size_t>(k - modulus.degree() + j)] -= f * m[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(modulus.degree()));
    return DensePoly(std::move(rem));
}

DensePoly x_power_minus_one(int k) {
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    c.front() = -1;
    c.back() = 1;
    return DensePoly(std::move(c));
}

}  // namespace

DensePoly cyclotomic(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic: k must be >= 1");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    static std::map<int, DensePoly> cache;
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    DensePoly result = x_power_minus_one(k);
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        // Lower divisors are already cached by the recursive structure of the
        // loop: they are computed before k the first time through.
        auto it = cache.find(d);
        DensePoly lower;
        if (it != cache.end()) {
            lower = it->second;
        } else {
            DensePoly acc = x_power_minus_one(d);
            for (int e = 1; e < d; ++e)
                if (d % e == 0) acc = exact_divide(acc, cache.at(e));
            cache.emplace(d, acc);
            lower = acc;
        }
        result = exact_divide(result, lower);
    }
    cache.emplace(k, result);
    return result;
}

CycloFieldPtr make_cyclo_field(int level) {
    auto field = std::make_shared<CycloField>();
    field->level = level;
    field->modulus = cyclotomic(level);
    field->degree = field->modulus.degree();
    return field;
}

CycloElem::CycloElem(CycloFieldPtr field, DensePoly rep) : field_(std::move(field)), rep_(poly_mod(rep, field_->modulus)) {}

CycloElem CycloElem::zero(CycloFieldPtr field) { return CycloElem(std::move(field), DensePoly()); }

CycloElem CycloElem::one(CycloFieldPtr field) { return CycloElem(std::move(field), DensePoly::constant(Rational(1))); }

CycloElem CycloElem::from_rational(CycloFieldPtr field, const Rational& q) {
    return CycloElem(std::move(field), DensePoly::constant(q));
}

CycloElem CycloElem::zeta(CycloFieldPtr field) { return CycloElem(std::move(field), DensePoly::monomial(Rational(1), 1)); }

CycloElem CycloElem::operator-() const { return CycloElem(field_, -rep_); }

CycloElem operator+(const CycloElem& a, const CycloElem& b) { return CycloElem(a.field_, a.rep_ + b.rep_); }

CycloElem operator-(const CycloElem& a, const CycloElem& b) { return CycloElem(a.field_, a.rep_ - b.rep_); }

CycloElem operator*(const CycloElem& a, const CycloElem& b) { return CycloElem(a.field_, a.rep_ * b.rep_); }

CycloElem operator*(const Rational& s, const CycloElem& a) { return CycloElem(a.field_, s * a.rep_); }

bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.field_->level == b.field_->level && a.rep_ == b.rep_;
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    // Extended Euclid: u * rep + v * modulus = gcd (a nonzero constant).
    DensePoly r0 = field_->modulus, r1 = rep_;
    DensePoly u0, u1 = DensePoly::constant(Rational(1));
    while (r1.degree() > 0) {
        // Quotient of r0 by r1.
        DensePoly q;
        {
            std::vector<Rational> rem(r0.coeffs());
            std::vector<Rational> quot(static_cast<size_t>(std::max(r0.degree() - r1.degree(), 0)) + 1, Rational(0));
            const auto& d = r1.coeffs();
            for (int k = r0.degree() - r1.degree(); k >= 0; --k) {
                if (static_cast<size_t>(k + r1.degree()) >= rem.size()) continue;
                Rational f = rem[static_cast<size_t>(k + r1.degree())] / r1.leading();
                quot[static_cast<size_t>(k)] = f;
                if (f == 0) continue;
                for (int j = 0; j <= r1.degree(); ++j)
                    rem[static_cast<size_t>(k + j)] -= f * d[static_cast<size_t>(j)];
            }
            q = DensePoly(std::move(quot));
        }
        DensePoly r2 = r0 - q * r1;
        DensePoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.is_zero()) throw std::domain_error("element shares a factor with the modulus");
    const Rational inv_const = Rational(1) / r1.leading();
    return CycloElem(field_, inv_const * u1);
}

CycloElem CycloElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElem acc = CycloElem::one(field_);
    CycloElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::complex<double> CycloElem::embed() const {
    const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / field_->level);
    std::complex<double> acc(0.0, 0.0);
    const auto& c = rep_.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + to_double_nearest(*it);
    return acc;
}

namespace {

CycloElem cosine_of_pi_over_n(const CycloFieldPtr& field) {
    // c = (zeta + zeta^{-1}) / 2 with zeta = exp(2 pi i / (2n)).
    CycloElem z = CycloElem::zeta(field);
    return Rational(1, 2) * (z + z.pow(field->level - 1));
}

void validate_spec(const SinusSpec& spec) {
    if (spec.m < 1 || spec.m % 2 == 0) throw std::invalid_argument("SinusSpec: m must be odd and >= 1");
    if (spec.n < 2) throw std::invalid_argument("SinusSpec: n must be >= 2");
}

}  // namespace

std::vector<CycloElem> sinus_poly_exact(const SinusSpec& spec) {
    validate_spec(spec);
    const auto field = make_cyclo_field(2 * spec.n);
    const CycloElem c = cosine_of_pi_over_n(field);
    const CycloElem two_c = Rational(2) * c;
    const int top = spec.m * spec.n - 2;

    std::vector<CycloElem> u;
    u.reserve(static_cast<size_t>(top) + 1);
    u.push_back(CycloElem::one(field));
    if (top >= 1) u.push_back(two_c);
    for (int k = 2; k <= top; ++k) u.push_back(two_c * u[static_cast<size_t>(k - 1)] - u[static_cast<size_t>(k - 2)]);

    // Defining identity: (x^2 - 2cx + 1) * S == x^{mn} + 1 in Q(zeta)[x].
    const int mn = spec.m * spec.n;
    std::vector<CycloElem> product(static_cast<size_t>(mn) + 1, CycloElem::zero(field));
    for (int k = 0; k <= top; ++k) {
        product[static_cast<size_t>(k)] = product[static_cast<size_t>(k)] + u[static_cast<size_t>(k)];
        product[static_cast<size_t>(k + 1)] = product[static_cast<size_t>(k + 1)] - two_c * u[static_cast<size_t>(k)];
        product[static_cast<size_t>(k + 2)] = product[static_cast<size_t>(k + 2)] + u[static_cast<size_t>(k)];
    }
    for (int k = 0; k <= mn; ++k) {
        const bool expect_one = (k == 0 || k == mn);
        const CycloElem expected = expect_one ? CycloElem::one(field) : CycloElem::zero(field);
        if (!(product[static_cast<size_t>(k)] == expected))
            throw ValidationFailed("sinus polynomial identity failed at coefficient " + std::to_string(k) + " for m=" +
                                   std::to_string(spec.m) + ", n=" + std::to_string(spec.n));
    }
    return u;
}

EigenCheckResult eigencheck_detailed(const SinusSpec& spec) {
    EigenCheckResult result;
    const auto s = sinus_poly_exact(spec);
    const auto& field = s.front().field();
    const CycloElem c = cosine_of_pi_over_n(field);
    const int d = spec.m * spec.n - 2;

    CycloElem s_at_one = CycloElem::zero(field);
    for (const auto& coeff : s) s_at_one = s_at_one + coeff;

    // (x^{d+2} + 1) S(1) - 2 x S(x), then exact synthetic division by (x-1)
    // twice over the field (the divisor is monic, so no inversions needed).
    std::vector<CycloElem> rhs(static_cast<size_t>(d) + 3, CycloElem::zero(field));
    rhs.front() = rhs.front() + s_at_one;
    rhs.back() = rhs.back() + s_at_one;
    for (int k = 0; k <= d; ++k)
        rhs[static_cast<size_t>(k + 1)] = rhs[static_cast<size_t>(k + 1)] - Rational(2) * s[static_cast<size_t>(k)];

    std::vector<CycloElem> cur = std::move(rhs);
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<CycloElem> quot(cur.size() - 1, CycloElem::zero(field));
        CycloElem acc = CycloElem::zero(field);
        for (int k = static_cast<int>(cur.size()) - 1; k >= 1; --k) {
            acc = acc + cur[static_cast<size_t>(k)];
            quot[static_cast<size_t>(k - 1)] = acc;
        }
        CycloElem rem = acc + cur.front();
        if (!rem.is_zero()) {
            result.detail = "right-hand side not divisible by (x-1)^2";
            return result;
        }
        cur = std::move(quot);
    }

    // (1 - c) Phi_1(S) must reproduce S exactly.
    const CycloElem one_minus_c = CycloElem::one(field) - c;
    for (int k = 0; k <= d; ++k) {
        if (!(one_minus_c * cur[static_cast<size_t>(k)] == s[static_cast<size_t>(k)])) {
            result.first_mismatch = k;
            result.detail = "eigen identity fails at coefficient " + std::to_string(k);
            return result;
        }
    }
    result.eigenvalue_identity = one_minus_c * s_at_one == CycloElem::one(field);
    if (!result.eigenvalue_identity) {
        result.detail = "(1 - c) S(1) != 1";
        return result;
    }
    result.ok = true;
    return result;
}

bool eigencheck(const SinusSpec& spec) { return eigencheck_detailed(spec).ok; }

std::vector<double> sinus_poly_numeric(const SinusSpec& spec) {
    validate_spec(spec);
    const int top = spec.m * spec.n - 2;
    const double denom = std::sin(std::numbers::pi / spec.n);
    std::vector<double> u(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) u[static_cast<size_t>(k)] = std::sin((k + 1) * std::numbers::pi / spec.n) / denom;
    return u;
}

namespace {

// Least squares for y ~ sum_j a_j basis_j(n); tiny dense normal equations.
std::vector<double> least_squares(const std::vector<std::vector<double>>& rows, const std::vector<double>& y) {
    const size_t p = rows.front().size();
    std::vector<std::vector<double>> ata(p, std::vector<double>(p, 0.0));
    std::vector<double> aty(p, 0.0);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t a = 0; a < p; ++a) {
            aty[a] += rows[i][a] * y[i];
            for (size_t b = 0; b < p; ++b) ata[a][b] += rows[i][a] * rows[i][b];
        }
    }
    for (size_t col = 0; col < p; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < p; ++r)
            if (std::abs(ata[r][col]) > std::abs(ata[pivot][col])) pivot = r;
        std::swap(ata[col], ata[pivot]);
        std::swap(aty[col], aty[pivot]);
        if (ata[col][col] == 0.0) return std::vector<double>(p, std::numeric_limits<double>::quiet_NaN());
        for (size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            const double f = ata[r][col] / ata[col][col];
            for (size_t cc = col; cc < p; ++cc) ata[r][cc] -= f * ata[col][cc];
            aty[r] -= f * aty[col];
        }
    }
    std::vector<double> beta(p);
    for (size_t a = 0; a < p; ++a) beta[a] = aty[a] / ata[a][a];
    return beta;
}

double sine_law(double x) { return 0.5 * std::numbers::pi * std::sin(std::numbers::pi * x); }

}  // namespace

ProfileReport asympt_profile(int d_param, const PalPoly& seed, long n_target, std::vector<long> checkpoints) {
    if (d_param < 2) throw std::invalid_argument("asympt_profile: D must be >= 2");
    if (seed.is_zero()) throw std::invalid_argument("asympt_profile: seed must be nonzero");
    for (const auto& c : seed.coeffs())
        if (c < 0) throw std::invalid_argument("asympt_profile: seed must be nonnegative");

    ProfileReport report;
    report.d_param = d_param;
    report.delta = 2 * d_param - 2;
    const long delta = report.delta;
    const long start = seed.index();

    // Map each requested checkpoint to the first reachable orbit index.
    std::vector<long> targets;
    for (long cp : checkpoints) {
        long n = std::max(cp, start);
        const long misalign = (n - start) % delta;
        if (misalign != 0) n += delta - misalign;
        if (targets.empty() || targets.back() != n) targets.push_back(n);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    long last_needed = std::max(n_target, targets.empty() ? start : targets.back()) + delta;

    std::map<long, Rational> constant_terms;
    std::map<long, PalPoly> snapshots;
    PalPoly cur = seed;
    constant_terms[start] = cur.coeff(0);
    for (long n = start; n < last_needed;) {
        cur = phi(cur, d_param);
        n += delta;
        constant_terms[n] = cur.coeff(0);
        if (std::binary_search(targets.begin(), targets.end(), n)) snapshots.emplace(n, cur);
    }
    if (std::binary_search(targets.begin(), targets.end(), start)) snapshots.emplace(start, seed);

    for (long n : targets) {
        const PalPoly& h = snapshots.at(n);
        const Rational alpha = constant_terms.at(n + delta);
        double sup = 0.0;
        for (long k = 0; k <= n; ++k) {
            const Rational exact = (h.coeff(static_cast<int>(k)) - h.coeff(0)) * Rational(n) / alpha;
            const double profile = to_double_nearest(exact);
            sup = std::max(sup, std::abs(profile - sine_law(static_cast<double>(k) / static_cast<double>(n))));
        }
        report.checkpoints.push_back(n);
        report.sup_deviation.push_back(sup);
    }

    // Growth-rate fits over the trailing window of checkpoints.
    const size_t count = report.checkpoints.size();
    const size_t window = std::min(count, std::max(count - count / 2, static_cast<size_t>(3)));
    report.e_estimate = report.b_estimate = report.c_estimate = std::numeric_limits<double>::quiet_NaN();
    if (window >= 2) {
        std::vector<std::vector<double>> rows2, rows3;
        std::vector<double> ys;
        for (size_t i = count - window; i < count; ++i) {
            const long n = report.checkpoints[i];
            if (constant_terms.at(n) == 0) continue;  // a seed with zero constant term
            report.fit_window.push_back(n);
            const double y = std::log(to_double_nearest(constant_terms.at(n + delta) / constant_terms.at(n)));
            const double ln = std::log(static_cast<double>(n));
            ys.push_back(y);
            rows2.push_back({1.0, ln});
            rows3.push_back({1.0, ln, 1.0 / static_cast<double>(n)});
        }
        const double dd = static_cast<double>(delta);
        if (ys.size() >= 2) {
            const auto beta2 = least_squares(rows2, ys);
            report.e_estimate = beta2[1] / dd;
            report.b_estimate = std::exp(beta2[0] / dd - report.e_estimate);
        }
        if (ys.size() >= 3) {
            const auto beta3 = least_squares(rows3, ys);
            const double e3 = beta3[1] / dd;
            report.c_estimate = (beta3[2] - e3 * dd * dd / 2.0) / dd;
        }
    }
    return report;
}

}  // namespace palphi
