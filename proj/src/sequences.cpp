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

#include "palphi/sequences.hpp"

#include <mutex>
#include <stdexcept>

namespace palphi {

namespace {

std::mutex g_orbit_mutex;

// Memoized Phi_2 orbit; element k is the k-th iterate of the seed.
const PalPoly& phi2_orbit_element(std::vector<PalPoly>& orbit, int k) {
    std::lock_guard<std::mutex> lock(g_orbit_mutex);
    while (static_cast<int>(orbit.size()) <= k) orbit.push_back(phi(orbit.back(), 2));
    return orbit[static_cast<size_t>(k)];
}

std::vector<PalPoly>& poupard_orbit() {
    static std::vector<PalPoly> orbit{PalPoly({Rational(1)}, 0)};
    return orbit;
}

std::vector<PalPoly>& kreweras_orbit() {
    static std::vector<PalPoly> orbit{PalPoly({Rational(1), Rational(1)}, 1)};
    return orbit;
}

}  // namespace

PalPoly poupard(int n) {
    if (n < 1) throw std::invalid_argument("poupard: n must be >= 1");
    return phi2_orbit_element(poupard_orbit(), n - 1);
}

PalPoly kreweras(int n) {
    if (n < 1) throw std::invalid_argument("kreweras: n must be >= 1");
    return phi2_orbit_element(kreweras_orbit(), n - 1);
}

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: n must be >= 0");
    if (n == 1) return Rational(-1, 2);
    std::vector<Rational> a(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        a[static_cast<size_t>(m)] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[static_cast<size_t>(j - 1)] = Rational(j) * (a[static_cast<size_t>(j - 1)] - a[static_cast<size_t>(j)]);
    }
    return a[0];
}

Integer reduced_tangent(int n) {
    if (n < 1) throw std::invalid_argument("reduced_tangent: n must be >= 1");
    Rational v = Rational(pow2(static_cast<unsigned long>(n)) * (pow2(2 * static_cast<unsigned long>(n)) - 1)) *
                 abs(bernoulli(2 * n)) / n;
    if (!is_integer(v))
        throw NonInteger("reduced tangent formula produced " + rational_to_string(v) + " at n=" + std::to_string(n));
    return to_integer(v);
}

Integer genocchi(int n) {
    if (n < 1) throw std::invalid_argument("genocchi: n must be >= 1");
    Rational v = Rational(2 * (pow2(2 * static_cast<unsigned long>(n)) - 1)) * abs(bernoulli(2 * n));
    if (!is_integer(v))
        throw NonInteger("genocchi formula produced " + rational_to_string(v) + " at n=" + std::to_string(n));
    return to_integer(v);
}

PalPoly kreweras_reduced(int n) {
    PalPoly g = kreweras(n);
    const Integer p = pow2(static_cast<unsigned long>(n - 1));
    std::vector<Rational> scaled(g.coeffs());
    for (auto& c : scaled) {
        c /= Rational(p);
        if (!is_integer(c))
            throw NotDivisible("2^" + std::to_string(n - 1) + " does not divide a coefficient of G_" +
                               std::to_string(n));
    }
    auto [quot, rem] = divide_by_linear_root(DensePoly(std::move(scaled)), Rational(-1));
    if (rem != 0) throw NotDivisible("(x+1) does not divide 2^{1-n} G_" + std::to_string(n));
    return palpoly_from_dense(quot, 2 * n - 2);
}

namespace {

// (x^i - x^{m-i}) / (x - 1): a signed run of consecutive powers, palindromic
// of index m-1; the zero polynomial when i = m-i.
PalPoly signed_run(int i, int m) {
    const int j = m - i;
    if (i == j) return PalPoly::zero(m - 1);
    std::vector<Rational> c(static_cast<size_t>(m), Rational(0));
    if (i > j) {
        for (int k = j; k < i; ++k) c[static_cast<size_t>(k)] = 1;
    } else {
        for (int k = i; k < j; ++k) c[static_cast<size_t>(k)] = -1;
    }
    return PalPoly(std::move(c), m - 1);
}

}  // namespace

std::pair<DensePoly, PalPoly> rho_triangle_Q(int n) {
    if (n < 0) throw std::invalid_argument("rho_triangle_Q: n must be >= 0");
    const int m = 2 * n + 1;
    std::vector<Rational> q(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) q[static_cast<size_t>(i)] = rho(signed_run(i, m));
    DensePoly qpoly(std::move(q));
    auto [quot, rem] = divide_by_linear_root(qpoly, Rational(1));
    if (rem != 0)
        throw NotDivisible("Q_" + std::to_string(n) + "(1) = " + rational_to_string(rem) +
                           ", expected 0 by antisymmetry");
    return {qpoly, palpoly_from_dense(quot, 2 * n)};
}

PalPoly rho_triangle_Qprime(int n) {
    if (n < 1) throw std::invalid_argument("rho_triangle_Qprime: n must be >= 1");
    const int m = 2 * n;
    std::vector<Rational> q(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) q[static_cast<size_t>(i)] = rho(signed_run(i, m));
    auto [quot, rem] = divide_by_linear_root(DensePoly(std::move(q)), Rational(1));
    if (rem != 0)
        throw NotDivisible("Q'_" + std::to_string(n) + "(1) = " + rational_to_string(rem) +
                           ", expected 0 by antisymmetry");
    return palpoly_from_dense(quot, 2 * n - 1);
}

Rational euler_via_rho(int j, Parity parity) {
    if (j < 0) throw std::invalid_argument("euler_via_rho: j must be >= 0");
    const int power = parity == Parity::Even ? 2 * j : 2 * j + 1;
    PalPoly p = monomial_times_binomial_power(0, power);
    return rho(scale(Rational(1, pow2(static_cast<unsigned long>(j))), p));
}

Phi1Index2Table phi1_index2_table(int steps) {
    if (steps < 1) throw std::invalid_argument("phi1_index2_table: steps must be >= 1");
    PhiOrbit orbit = iterate_phi(PalPoly({0, 1, 0}, 2), 1, steps);
    Phi1Index2Table table;
    table.constants.name = "phi1-from-x-constant-terms";
    table.middles.name = "phi1-from-x-middle-coefficients";
    for (const auto& it : orbit.iterates) {
        table.constants.values.push_back(it.coeff(0));
        table.middles.values.push_back(it.coeff(1));
    }
    return table;
}

bool satisfies_phi1_recurrence(const SequenceTable& table) {
    const auto& a = table.values;
    for (size_t k = 2; k < a.size(); ++k)
        if (a[k] != 4 * a[k - 1] - 2 * a[k - 2]) return false;
    return true;
}

SalieTable salie_table(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("salie_table: rows and cols must be >= 1");
    SalieTable table;
    table.rows = rows;
    table.cols = cols;
    table.entries.resize(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        PalPoly cur = monomial_times_binomial_power(i, 1);
        auto& row = table.entries[static_cast<size_t>(i)];
        row.reserve(static_cast<size_t>(cols));
        for (int j = 0; j < cols; ++j) {
            if (j > 0) cur = phi(cur, 2);
            Rational v = cur.coeff(0) / Rational(pow2(static_cast<unsigned long>(j)));
            if (!is_integer(v)) table.non_integral.emplace_back(i, j);
            row.push_back(std::move(v));
        }
    }
    return table;
}

PalPoly monomial_times_binomial_power(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("monomial_times_binomial_power: need i, j >= 0");
    const int d = 2 * i + j;
    std::vector<Rational> c(static_cast<size_t>(d) + 1, Rational(0));
    for (int k = 0; k <= j; ++k)
        c[static_cast<size_t>(i + k)] = Rational(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k)));
    return PalPoly(std::move(c), d);
}

}  // namespace palphi
