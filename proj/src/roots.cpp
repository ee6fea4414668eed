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

#include "palphi/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "palphi/sequences.hpp"

namespace palphi {

bool lakatos_check(const PalPoly& p) {
    const int d = p.index();
    if (d < 1) throw std::invalid_argument("lakatos_check: index must be >= 1");
    Rational interior(0);
    for (int j = 1; j <= d - 1; ++j) interior += abs(p.coeff(j));
    return 2 * abs(p.coeff(d)) >= interior;
}

bool concavity_criterion(const PalPoly& p) {
    const int d = p.index();
    for (int j = 0; j <= d; ++j)
        if (2 * p.coeff(j) < p.coeff(j - 1) + p.coeff(j + 1)) return false;
    return true;
}

ShapeReport shape_check(const PalPoly& p) {
    const int d = p.index();
    ShapeReport report;
    report.unimodal = true;
    for (int j = 0; j + 1 <= d / 2; ++j)
        if (p.coeff(j) > p.coeff(j + 1)) report.unimodal = false;
    for (int j = (d + 1) / 2; j + 1 <= d; ++j)
        if (p.coeff(j) < p.coeff(j + 1)) report.unimodal = false;
    report.concave = true;
    report.strictly_concave = true;
    for (int j = 1; j <= d - 1; ++j) {
        const Rational second = p.coeff(j - 1) - 2 * p.coeff(j) + p.coeff(j + 1);
        if (second > 0) report.concave = false;
        if (second >= 0) report.strictly_concave = false;
    }
    report.strictly_concave = report.strictly_concave && report.concave;
    return report;
}

namespace {

using Complex = std::complex<double>;

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// sum_k |c_k| |z|^k, the natural scale for a backward-error test.
double horner_scale(const std::vector<Complex>& c, double az) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * az + std::abs(*it);
    return acc;
}

std::vector<Complex> derivative(const std::vector<Complex>& c) {
    std::vector<Complex> d(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
    return d;
}

// Exact normalization by the largest |coefficient|, then correctly rounded
// conversion; keeps huge integer coefficients (tangent-number growth) inside
// double range.
std::vector<Complex> to_normalized_complex(const DensePoly& p) {
    Rational maxabs(0);
    for (const auto& c : p.coeffs()) {
        Rational a = abs(c);
        if (a > maxabs) maxabs = a;
    }
    std::vector<Complex> out(p.coeffs().size());
    for (size_t k = 0; k < out.size(); ++k)
        out[k] = Complex(to_double_nearest(p.coeffs()[k] / maxabs), 0.0);
    return out;
}

}  // namespace

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, int max_iters, double tol,
                                  int* iterations_out) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};
    const std::vector<Complex> deriv = derivative(coeffs);
    constexpr double kResidualFloor = 8.0 * std::numeric_limits<double>::epsilon();

    std::vector<Complex> z(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        // Slightly off-circle ring with an irrational phase so no initial
        // point sits on a symmetry axis of palindromic inputs.
        const double angle = 2.0 * std::numbers::pi * (k + 0.618034) / n + 0.42;
        const double radius = 1.0 + 0.06 + 0.01 * (k % 3);
        z[static_cast<size_t>(k)] = std::polar(radius, angle);
    }

    for (int iter = 1; iter <= max_iters; ++iter) {
        bool all_settled = true;
        for (int k = 0; k < n; ++k) {
            Complex& zk = z[static_cast<size_t>(k)];
            const Complex pv = horner(coeffs, zk);
            const double scale = horner_scale(coeffs, std::abs(zk));
            if (std::abs(pv) <= kResidualFloor * scale) continue;  // cannot improve in doubles
            const Complex dv = horner(deriv, zk);
            if (pv == Complex(0.0, 0.0)) continue;
            if (dv == Complex(0.0, 0.0)) {
                zk += Complex(1e-8, 1e-8);
                all_settled = false;
                continue;
            }
            const Complex newton = pv / dv;
            Complex repulsion(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0 / (zk - z[static_cast<size_t>(j)]);
            const Complex denom = 1.0 - newton * repulsion;
            const Complex step = denom == Complex(0.0, 0.0) ? newton : newton / denom;
            zk -= step;
            if (std::abs(step) > tol * (1.0 + std::abs(zk))) all_settled = false;
        }
        if (all_settled) {
            if (iterations_out) *iterations_out = iter;
            return z;
        }
    }
    throw NoConvergence("simultaneous root iteration did not settle", max_iters);
}

RootReport roots_numeric(const PalPoly& p, int max_iters, double tol) {
    if (p.is_zero()) throw std::invalid_argument("roots_numeric: zero polynomial has no well-defined roots");
    RootReport report;
    const int valuation = p.valuation();
    const int degree = p.degree();
    if (degree < 1) return report;

    for (int k = 0; k < valuation; ++k) report.roots.emplace_back(0.0, 0.0);

    if (degree > valuation) {
        // Strip the power of x, then isolate multiplicities exactly so the
        // iteration only sees simple roots.
        std::vector<Rational> core(p.coeffs().begin() + valuation, p.coeffs().begin() + degree + 1);
        DensePoly q{std::move(core)};
        int iterations_total = 0;
        for (const auto& [factor, multiplicity] : squarefree_decomposition(q)) {
            int iters = 0;
            auto roots = aberth_roots(to_normalized_complex(factor), max_iters, tol, &iters);
            iterations_total = std::max(iterations_total, iters);
            for (const auto& r : roots)
                for (int m = 0; m < multiplicity; ++m) report.roots.push_back(r);
        }
        report.iterations = iterations_total;
    }

    const auto normalized = to_normalized_complex(p.dense());
    for (const auto& z : report.roots) {
        const double deviation = std::abs(std::abs(z) - 1.0);
        const double scale = horner_scale(normalized, std::abs(z));
        const double residual = scale > 0.0 ? std::abs(horner(normalized, z)) / scale : 0.0;
        report.modulus_deviation.push_back(deviation);
        report.residual.push_back(residual);
        report.max_modulus_deviation = std::max(report.max_modulus_deviation, deviation);
        report.max_residual = std::max(report.max_residual, residual);
    }
    return report;
}

LatticeReport compare_to_circle_lattice(int n, int max_iters, double tol) {
    if (n < 2) throw std::invalid_argument("compare_to_circle_lattice: n must be >= 2");
    LatticeReport report;
    report.n = n;
    RootReport roots = roots_numeric(poupard(n), max_iters, tol);

    const int lattice_size = 2 * n;
    std::vector<Complex> lattice(static_cast<size_t>(lattice_size));
    for (int k = 0; k < lattice_size; ++k)
        lattice[static_cast<size_t>(k)] = std::polar(1.0, std::numbers::pi * (2.0 * k + 1.0) / lattice_size);

    std::vector<bool> used(static_cast<size_t>(lattice_size), false);
    double total = 0.0;
    for (const auto& z : roots.roots) {
        int best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (int k = 0; k < lattice_size; ++k) {
            const double dist = std::abs(z - lattice[static_cast<size_t>(k)]);
            if (dist < best_dist) {
                best_dist = dist;
                best = k;
            }
        }
        used[static_cast<size_t>(best)] = true;
        report.matches.push_back({z, best, best_dist});
        report.max_distance = std::max(report.max_distance, best_dist);
        total += best_dist;
    }
    for (int k = 0; k < lattice_size; ++k)
        if (!used[static_cast<size_t>(k)]) report.unmatched_lattice.push_back(k);
    if (!report.matches.empty()) report.mean_distance = total / static_cast<double>(report.matches.size());
    return report;
}

}  // namespace palphi
