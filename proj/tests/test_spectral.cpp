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

#include <cmath>
#include <complex>

#include "palphi/spectral.hpp"

using namespace palphi;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == DensePoly({-1, 1}));
    CHECK(cyclotomic(2) == DensePoly({1, 1}));
    CHECK(cyclotomic(4) == DensePoly({1, 0, 1}));
    CHECK(cyclotomic(6) == DensePoly({1, -1, 1}));
    CHECK(cyclotomic(12) == DensePoly({1, 0, -1, 0, 1}));

    // product over divisors reassembles x^k - 1
    for (int k = 1; k <= 24; ++k) {
        DensePoly prod = DensePoly::constant(Rational(1));
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) prod = prod * cyclotomic(d);
        std::vector<Rational> expect(static_cast<size_t>(k) + 1, Rational(0));
        expect.front() = -1;
        expect.back() = 1;
        CHECK(prod == DensePoly(std::move(expect)));
    }
}

TEST_CASE("cyclotomic field arithmetic") {
    auto field = make_cyclo_field(12);
    CHECK(field->degree == 4);
    CycloElem z = CycloElem::zeta(field);
    // zeta^12 = 1 and zeta^6 = -1
    CHECK(z.pow(12) == CycloElem::one(field));
    CHECK(z.pow(6) == -CycloElem::one(field));
    // inverses multiply back to one
    CycloElem a = z + Rational(3) * CycloElem::one(field);
    CHECK(a * a.inverse() == CycloElem::one(field));
    CHECK(z.inverse() == z.pow(11));
    // embedding sits on the unit circle at angle pi/6
    std::complex<double> e = z.embed();
    CHECK(std::abs(std::abs(e) - 1.0) < 1e-14);
    CHECK(e.real() == doctest::Approx(std::cos(std::numbers::pi / 6)).epsilon(1e-14));
}

TEST_CASE("sinus polynomials, explicit small cases") {
    auto s12 = sinus_poly_exact({1, 2});
    REQUIRE(s12.size() == 1);
    CHECK(s12[0] == CycloElem::one(s12[0].field()));

    auto s13 = sinus_poly_exact({1, 3});
    REQUIRE(s13.size() == 2);
    CHECK(s13[0] == CycloElem::one(s13[0].field()));
    CHECK(s13[1] == CycloElem::one(s13[1].field()));

    auto s14 = sinus_poly_exact({1, 4});
    REQUIRE(s14.size() == 3);
    // middle coefficient is 2cos(pi/4) = sqrt(2)
    CHECK(s14[1].embed().real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::abs(s14[1].embed().imag()) < 1e-14);
}

TEST_CASE("sinus coefficients are palindromic") {
    for (int n = 2; n <= 10; ++n) {
        for (int m = 1; m <= 3; m += 2) {
            auto s = sinus_poly_exact({m, n});
            const size_t top = s.size() - 1;
            for (size_t k = 0; k <= top / 2; ++k) CHECK(s[k] == s[top - k]);
        }
    }
}

TEST_CASE("numeric and exact sinus coefficients agree") {
    for (int n = 2; n <= 14; ++n) {
        auto exact = sinus_poly_exact({1, n});
        auto numeric = sinus_poly_numeric({1, n});
        REQUIRE(exact.size() == numeric.size());
        for (size_t k = 0; k < exact.size(); ++k) {
            const double e = exact[k].embed().real();
            CHECK(std::abs(exact[k].embed().imag()) < 1e-12);
            CHECK(e == doctest::Approx(numeric[k]).epsilon(1e-12));
        }
    }
}

TEST_CASE("eigencheck on explicit cases") {
    // n=2: S = 1, c = 0, eigenvalue 1
    CHECK(eigencheck({1, 2}));
    // n=3: S = x+1, c = 1/2, eigenvalue 2 = S(1)
    EigenCheckResult r13 = eigencheck_detailed({1, 3});
    CHECK(r13.ok);
    CHECK(r13.eigenvalue_identity);
    // deeper exact pipeline
    CHECK(eigencheck({3, 5}));
    CHECK(eigencheck({1, 12}));
    CHECK(eigencheck({5, 6}));
}

TEST_CASE("sinus validation rejects malformed specs") {
    CHECK_THROWS_AS(sinus_poly_exact({2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(sinus_poly_exact({1, 1}), std::invalid_argument);
}

TEST_CASE("profile estimator on a short tangent-family run") {
    ProfileReport report = asympt_profile(2, make_palpoly({1}, 0), 60, {20, 40, 60});
    REQUIRE(report.checkpoints.size() == 3);
    CHECK(report.checkpoints[0] == 20);
    CHECK(report.sup_deviation[0] > 0.0);
    // deviation shrinks along the run
    CHECK(report.sup_deviation[2] < report.sup_deviation[0]);
    // growth exponent near 1 even this early
    CHECK(report.e_estimate > 0.7);
    CHECK(report.e_estimate < 1.2);
    CHECK(report.b_estimate > 0.0);
}

TEST_CASE("profile checkpoint mapping respects the orbit stride") {
    // seed 1+x has index 1, so reachable indices are odd
    ProfileReport report = asympt_profile(2, make_palpoly({1, 1}, 1), 41, {20, 40});
    REQUIRE(report.checkpoints.size() == 2);
    CHECK(report.checkpoints[0] == 21);
    CHECK(report.checkpoints[1] == 41);
}
