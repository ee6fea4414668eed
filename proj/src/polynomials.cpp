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

#include "palphi/polynomials.hpp"

#include <algorithm>
#include <string>

namespace palphi {

namespace {
const Rational kZero = Rational(0);

void strip_trailing_zeros(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

DensePoly DensePoly::constant(const Rational& c) {
    return c == 0 ? DensePoly() : DensePoly(std::vector<Rational>{c});
}

DensePoly DensePoly::monomial(const Rational& c, int k) {
    if (c == 0) return DensePoly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return DensePoly(std::move(v));
}

const Rational& DensePoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

const Rational& DensePoly::leading() const {
    if (is_zero()) return kZero;
    return coeffs_.back();
}

Rational DensePoly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

DensePoly DensePoly::derivative() const {
    if (degree() < 1) return DensePoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return DensePoly(std::move(d));
}

DensePoly DensePoly::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
    return DensePoly(std::move(c));
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return DensePoly(std::move(c));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return DensePoly(std::move(c));
}

DensePoly operator*(const Rational& s, const DensePoly& p) {
    if (s == 0) return DensePoly();
    std::vector<Rational> c(p.coeffs_.size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = s * p.coeffs_[k];
    return DensePoly(std::move(c));
}

PalPoly::PalPoly() : coeffs_{Rational(0)}, index_(0) {}

PalPoly::PalPoly(std::vector<Rational> coeffs, int index) : coeffs_(std::move(coeffs)), index_(index) {
    if (index_ < 0) throw LengthMismatch("palindromic index must be nonnegative");
    if (coeffs_.size() != static_cast<size_t>(index_) + 1)
        throw LengthMismatch("expected " + std::to_string(index_ + 1) + " coefficients for index " +
                             std::to_string(index_) + ", got " + std::to_string(coeffs_.size()));
    for (int j = 0; 2 * j <= index_; ++j) {
        if (coeffs_[static_cast<size_t>(j)] != coeffs_[static_cast<size_t>(index_ - j)])
            throw NotPalindromic("coefficient " + std::to_string(j) + " (" +
                                 rational_to_string(coeffs_[static_cast<size_t>(j)]) + ") differs from coefficient " +
                                 std::to_string(index_ - j) + " (" +
                                 rational_to_string(coeffs_[static_cast<size_t>(index_ - j)]) + ")");
    }
}

PalPoly PalPoly::zero(int index) {
    if (index < 0) throw LengthMismatch("palindromic index must be nonnegative");
    return PalPoly(std::vector<Rational>(static_cast<size_t>(index) + 1, Rational(0)), index);
}

const Rational& PalPoly::coeff(int j) const {
    if (j < 0 || j > index_) return kZero;
    return coeffs_[static_cast<size_t>(j)];
}

bool PalPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int PalPoly::degree() const {
    for (int j = index_; j >= 0; --j)
        if (coeffs_[static_cast<size_t>(j)] != 0) return j;
    return -1;
}

int PalPoly::valuation() const {
    for (int j = 0; j <= index_; ++j)
        if (coeffs_[static_cast<size_t>(j)] != 0) return j;
    return index_ + 1;
}

Rational PalPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Rational PalPoly::at_one() const {
    Rational acc(0);
    for (const auto& c : coeffs_) acc += c;
    return acc;
}

DensePoly PalPoly::dense() const { return DensePoly(coeffs_); }

PalPoly make_palpoly(std::vector<Rational> coeffs, int index) { return PalPoly(std::move(coeffs), index); }

PalPoly mul(const PalPoly& a, const PalPoly& b) {
    const int d = a.index() + b.index();
    std::vector<Rational> c(static_cast<size_t>(d) + 1, Rational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return PalPoly(std::move(c), d);
}

PalPoly add(const PalPoly& a, const PalPoly& b) {
    if (a.index() != b.index())
        throw LengthMismatch("cannot add palindromic polynomials of indices " + std::to_string(a.index()) + " and " +
                             std::to_string(b.index()));
    std::vector<Rational> c(a.coeffs());
    for (size_t j = 0; j < c.size(); ++j) c[j] += b.coeffs()[j];
    return PalPoly(std::move(c), a.index());
}

PalPoly scale(const Rational& s, const PalPoly& p) {
    std::vector<Rational> c(p.coeffs());
    for (auto& x : c) x *= s;
    return PalPoly(std::move(c), p.index());
}

PalPoly palpoly_from_dense(const DensePoly& p, int index) {
    if (p.degree() > index)
        throw LengthMismatch("degree " + std::to_string(p.degree()) + " exceeds index " + std::to_string(index));
    std::vector<Rational> c(static_cast<size_t>(index) + 1, Rational(0));
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<size_t>(k)] = p.coeff(k);
    return PalPoly(std::move(c), index);
}

std::pair<DensePoly, Rational> divide_by_linear_root(const DensePoly& p, const Rational& r) {
    if (p.is_zero()) return {DensePoly(), Rational(0)};
    const auto& c = p.coeffs();
    std::vector<Rational> q(c.size() - 1, Rational(0));
    Rational acc = c.back();
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
        q[static_cast<size_t>(k)] = acc;
        acc = acc * r + c[static_cast<size_t>(k)];
    }
    return {DensePoly(std::move(q)), acc};
}

DensePoly exact_quotient_by_square(const DensePoly& q) {
    DensePoly cur = q;
    for (int pass = 0; pass < 2; ++pass) {
        auto [quot, rem] = divide_by_linear_root(cur, Rational(1));
        if (rem != 0)
            throw NotDivisible("polynomial is not divisible by (x-1)^2: remainder " + rational_to_string(rem) +
                               " at pass " + std::to_string(pass + 1));
        cur = std::move(quot);
    }
    return cur;
}

DensePoly exact_divide(const DensePoly& num, const DensePoly& den) {
    if (den.is_zero()) throw NotDivisible("division by the zero polynomial");
    if (num.is_zero()) return DensePoly();
    if (num.degree() < den.degree()) throw NotDivisible("quotient degree would be negative");
    std::vector<Rational> rem(num.coeffs());
    std::vector<Rational> quot(static_cast<size_t>(num.degree() - den.degree()) + 1, Rational(0));
    const auto& d = den.coeffs();
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        Rational f = rem[static_cast<size_t>(k + den.degree())] / den.leading();
        quot[static_cast<size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= den.degree(); ++j) rem[static_cast<size_t>(k + j)] -= f * d[static_cast<size_t>(j)];
    }
    for (const auto& c : rem)
        if (c != 0) throw NotDivisible("polynomial division left a nonzero remainder");
    return DensePoly(std::move(quot));
}

namespace {

// Integer image of a rational polynomial: clear denominators, divide out the
// content, make the leading coefficient positive.
std::vector<Integer> primitive_integer_image(const DensePoly& p) {
    Integer lcm_den(1);
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> v(p.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k) {
        Rational scaled = Rational(lcm_den) * p.coeffs()[k];
        v[k] = scaled.get_num();
    }
    Integer content(0);
    for (const auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 0) return {};
    for (auto& c : v) c /= content;
    if (v.back() < 0)
        for (auto& c : v) c = -c;
    return v;
}

int int_degree(const std::vector<Integer>& v) { return static_cast<int>(v.size()) - 1; }

void int_strip(std::vector<Integer>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all in Z[x].
std::vector<Integer> pseudo_remainder(std::vector<Integer> a, const std::vector<Integer>& b) {
    const Integer& lb = b.back();
    int e = int_degree(a) - int_degree(b) + 1;
    while (!a.empty() && int_degree(a) >= int_degree(b)) {
        const int shift = int_degree(a) - int_degree(b);
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (size_t j = 0; j < b.size(); ++j) a[static_cast<size_t>(shift) + j] -= la * b[j];
        int_strip(a);
        --e;
    }
    if (e > 0) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : a) c *= f;
    }
    return a;
}

std::vector<Integer> primitive_part(std::vector<Integer> v) {
    Integer content(0);
    for (const auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : v) c /= content;
    if (!v.empty() && v.back() < 0)
        for (auto& c : v) c = -c;
    return v;
}

// Subresultant polynomial remainder sequence.
std::vector<Integer> integer_gcd(std::vector<Integer> a, std::vector<Integer> b) {
    if (int_degree(a) < int_degree(b)) std::swap(a, b);
    if (b.empty()) return primitive_part(std::move(a));
    Integer g(1), h(1);
    while (true) {
        const int d = int_degree(a) - int_degree(b);
        std::vector<Integer> r = pseudo_remainder(a, b);
        if (r.empty()) return primitive_part(std::move(b));
        if (int_degree(r) == 0) return {Integer(1)};
        a = std::move(b);
        Integer divisor = g;
        Integer hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(d));
        divisor *= hd;
        for (auto& c : r) {
            Integer q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
            if (rem != 0) throw std::logic_error("subresultant remainder sequence lost exactness");
            c = q;
        }
        b = std::move(r);
        g = a.back();
        if (d > 0) {
            Integer gd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(d));
            Integer hd1;
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(d - 1));
            h = gd / hd1;
        }
    }
}

DensePoly monic(const DensePoly& p) {
    if (p.is_zero()) return p;
    return (Rational(1) / p.leading()) * p;
}

}  // namespace

DensePoly gcd_monic(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    auto g = integer_gcd(primitive_integer_image(a), primitive_integer_image(b));
    std::vector<Rational> c(g.size());
    for (size_t k = 0; k < g.size(); ++k) c[k] = Rational(g[k]);
    return monic(DensePoly(std::move(c)));
}

std::vector<std::pair<DensePoly, int>> squarefree_decomposition(const DensePoly& p) {
    std::vector<std::pair<DensePoly, int>> result;
    if (p.degree() < 1) return result;
    DensePoly w = monic(p);
    DensePoly wp = w.derivative();
    DensePoly g = gcd_monic(w, wp);
    if (g.degree() == 0) {
        result.emplace_back(w, 1);
        return result;
    }
    DensePoly c = exact_divide(w, g);
    DensePoly d = exact_divide(wp, g) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        DensePoly a = gcd_monic(c, d);
        DensePoly cn = exact_divide(c, a);
        d = exact_divide(d, a) - cn.derivative();
        if (a.degree() > 0) result.emplace_back(std::move(a), i);
        c = std::move(cn);
    }
    return result;
}

}  // namespace palphi
