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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "palphi/operators.hpp"
#include "palphi/roots.hpp"
#include "palphi/sequences.hpp"
#include "test_util.hpp"

using namespace palphi;

namespace {
PalPoly one_minus_x_squared_times(const PalPoly& p) {
    return mul(make_palpoly({1, -2, 1}, 2), p);
}
}  // namespace

TEST_CASE("lakatos criterion") {
    CHECK(lakatos_check(make_palpoly({1, 2, 1}, 2)));
    CHECK_FALSE(lakatos_check(make_palpoly({1, 10, 1}, 2)));
    // (1-x)^2 F_3 hits the criterion with equality
    CHECK(lakatos_check(one_minus_x_squared_times(poupard(3))));
    CHECK_THROWS_AS(lakatos_check(make_palpoly({1}, 0)), std::invalid_argument);
}

TEST_CASE("concavity criterion") {
    CHECK(concavity_criterion(poupard(4)));
    CHECK(concavity_criterion(make_palpoly({1}, 0)));
    CHECK_FALSE(concavity_criterion(make_palpoly({1, 0, 3, 0, 1}, 4)));
}

TEST_CASE("shape predicates") {
    ShapeReport f3 = shape_check(poupard(3));
    CHECK(f3.unimodal);
    CHECK(f3.concave);
    CHECK(f3.strictly_concave);

    ShapeReport flat = shape_check(make_palpoly({1, 1, 1}, 2));
    CHECK(flat.unimodal);
    CHECK(flat.concave);
    CHECK_FALSE(flat.strictly_concave);

    ShapeReport peak = shape_check(make_palpoly({1, 2, 1}, 2));
    CHECK(peak.unimodal);
    CHECK(peak.concave);
    CHECK(peak.strictly_concave);

    ShapeReport bimodal = shape_check(make_palpoly({1, 0, 3, 0, 1}, 4));
    CHECK_FALSE(bimodal.unimodal);
    CHECK_FALSE(bimodal.concave);
    CHECK_FALSE(bimodal.strictly_concave);
}

TEST_CASE("concavity criterion implies lakatos after multiplying by (1-x)^2") {
    std::mt19937 rng(47);
    int verified = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<int> deg(0, 24);
        PalPoly p = testing::random_concave_palpoly(rng, deg(rng));
        REQUIRE(concavity_criterion(p));
        if (p.is_zero()) continue;
        CHECK(lakatos_check(one_minus_x_squared_times(p)));
        ++verified;
    }
    CHECK(verified > 300);
}

TEST_CASE("roots of small explicit polynomials") {
    RootReport squared = roots_numeric(make_palpoly({1, 2, 1}, 2));
    REQUIRE(squared.roots.size() == 2);
    for (const auto& z : squared.roots) {
        CHECK(std::abs(z - std::complex<double>(-1.0, 0.0)) < 1e-12);
    }
    CHECK(squared.max_modulus_deviation < 1e-12);

    RootReport f2 = roots_numeric(poupard(2));
    REQUIRE(f2.roots.size() == 2);
    CHECK(f2.max_modulus_deviation < 1e-12);

    // x at index 2: a single root at the origin
    RootReport x = roots_numeric(make_palpoly({0, 1, 0}, 2));
    REQUIRE(x.roots.size() == 1);
    CHECK(std::abs(x.roots[0]) == 0.0);
    CHECK(x.max_modulus_deviation == 1.0);
}

TEST_CASE("poupard F_12 has 22 roots on the unit circle") {
    RootReport report = roots_numeric(poupard(12));
    CHECK(report.roots.size() == 22);
    CHECK(report.max_modulus_deviation < 1e-9);
    CHECK(report.max_residual < 1e-12);
}

TEST_CASE("family roots stay on the circle at desk scale") {
    for (int n = 2; n <= 16; ++n) {
        CHECK(roots_numeric(poupard(n)).max_modulus_deviation < 1e-8);
        CHECK(roots_numeric(kreweras(n)).max_modulus_deviation < 1e-8);
    }
}

TEST_CASE("phi images pass the criterion and land on the circle") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> deg(0, 20);
        std::uniform_int_distribution<int> dparam(0, 3);
        int d = deg(rng);
        int D = dparam(rng);
        if (D == 0 && d < 2) continue;
        PalPoly p = testing::random_nonneg_palpoly_interior(rng, d, 12);
        if (p.is_zero()) continue;
        PalPoly image = phi(p, D);
        CHECK(concavity_criterion(image));
        CHECK(lakatos_check(one_minus_x_squared_times(image)));
        if (image.degree() >= 1) CHECK(roots_numeric(image).max_modulus_deviation < 1e-8);
    }
}

TEST_CASE("lattice comparison flags the gap next to angle zero") {
    LatticeReport report = compare_to_circle_lattice(12);
    CHECK(report.matches.size() == 22);
    REQUIRE(report.unmatched_lattice.size() == 2);
    // the unmatched pair is exp(+- i pi / 24): lattice indices 0 and 23
    CHECK(report.unmatched_lattice[0] == 0);
    CHECK(report.unmatched_lattice[1] == 23);
    CHECK(report.max_distance < 0.5);

    LatticeReport small = compare_to_circle_lattice(2);
    CHECK(small.n == 2);
    CHECK(small.matches.size() == 2);

    // proximity improves with n
    CHECK(compare_to_circle_lattice(6).max_distance < compare_to_circle_lattice(3).max_distance);
}

TEST_CASE("aberth root finder on plain products") {
    // (x-2)(x+3)(x-1/2) with double coefficients
    std::vector<std::complex<double>> coeffs = {{3.0, 0.0}, {-6.5, 0.0}, {0.5, 0.0}, {1.0, 0.0}};
    auto roots = aberth_roots(coeffs, 200, 1e-13);
    REQUIRE(roots.size() == 3);
    std::vector<double> re;
    for (auto& z : roots) {
        CHECK(std::abs(z.imag()) < 1e-9);
        re.push_back(z.real());
    }
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-3.0).epsilon(1e-9));
    CHECK(re[1] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(re[2] == doctest::Approx(2.0).epsilon(1e-9));
}
