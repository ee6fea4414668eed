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

#include "palphi/polynomials.hpp"
#include "test_util.hpp"

using namespace palphi;

TEST_CASE("rational helpers") {
    CHECK(rational_from_string("3/6") == Rational(1, 2));
    CHECK(rational_from_string("-4/2") == Rational(-2));
    CHECK(rational_from_string("17") == Rational(17));
    CHECK(rational_to_string(Rational(-3, 7)) == "-3/7");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);

    CHECK(is_integer(Rational(4, 2)));
    CHECK(to_integer(Rational(12, 4)) == 3);
    CHECK_THROWS_AS(to_integer(Rational(1, 3)), NonInteger);
}

TEST_CASE("to_double_nearest matches correctly rounded literals") {
    CHECK(to_double_nearest(Rational(1, 3)) == 1.0 / 3.0);
    CHECK(to_double_nearest(Rational(2, 3)) == 2.0 / 3.0);
    CHECK(to_double_nearest(Rational(1, 10)) == 0.1);
    CHECK(to_double_nearest(Rational(-7, 16)) == -0.4375);
    CHECK(to_double_nearest(Rational(0)) == 0.0);
    // (2^60 + 1) / 2^60 rounds to 1.0
    Rational tiny_above_one(pow2(60) + 1, pow2(60));
    tiny_above_one.canonicalize();
    CHECK(to_double_nearest(tiny_above_one) == 1.0);
    // Exactly representable large integer
    CHECK(to_double_nearest(Rational(pow2(52) + 1)) == std::ldexp(1.0, 52) + 1.0);
    // Random rationals stay within half an ulp of the truncated GMP value
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int k = 0; k < 500; ++k) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        const double ours = to_double_nearest(q);
        const double gmp = q.get_d();  // truncated toward zero
        CHECK(std::abs(ours - gmp) <= std::abs(gmp) * 1e-15 + 1e-300);
    }
}

TEST_CASE("make_palpoly validates shape") {
    PalPoly p = make_palpoly({1, 2, 1}, 2);
    CHECK(p.index() == 2);
    CHECK(p.coeff(1) == 2);

    PalPoly x = make_palpoly({0, 1, 0}, 2);
    CHECK(x.index() == 2);
    CHECK(x.degree() == 1);
    CHECK(x.valuation() == 1);

    CHECK_THROWS_AS(make_palpoly({1, 2}, 1), NotPalindromic);
    CHECK_THROWS_AS(make_palpoly({1, 2, 1}, 3), LengthMismatch);
}

TEST_CASE("zero polynomial keeps its index and equality is index-aware") {
    PalPoly z2 = PalPoly::zero(2);
    PalPoly z4 = PalPoly::zero(4);
    CHECK(z2.is_zero());
    CHECK(z4.is_zero());
    CHECK(z2 != z4);
    CHECK(z2 == PalPoly::zero(2));
    CHECK(make_palpoly({0, 1, 0}, 2) != make_palpoly({0, 1, 0, 0, 0}, 4));
}

TEST_CASE("eval is exact Horner") {
    PalPoly p = make_palpoly({1, 2, 1}, 2);
    CHECK(p.eval(Rational(1)) == 4);
    CHECK(p.eval(Rational(0)) == 1);
    CHECK(p.eval(Rational(1, 2)) == Rational(9, 4));
    CHECK(p.at_one() == 4);

    DensePoly d({Rational(3), Rational(-2), Rational(5)});
    CHECK(d.eval(Rational(2)) == 3 - 4 + 20);
}

TEST_CASE("exact_quotient_by_square") {
    // (x-1)^2 -> 1
    DensePoly sq({1, -2, 1});
    CHECK(exact_quotient_by_square(sq) == DensePoly::constant(Rational(1)));
    // 2x^3 - 2x^2 - 2x + 2 = 2 (x-1)^2 (x+1)
    DensePoly q({2, -2, -2, 2});
    CHECK(exact_quotient_by_square(q) == DensePoly({2, 2}));
    // x^2 + 1 has no root at 1
    CHECK_THROWS_AS(exact_quotient_by_square(DensePoly({1, 0, 1})), NotDivisible);
}

TEST_CASE("quotient by square inverts multiplication by (x-1)^2") {
    std::mt19937 rng(11);
    DensePoly square({1, -2, 1});
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> deg(0, 12);
        std::uniform_int_distribution<long> coeff(-9, 9);
        std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
        for (auto& v : c) v = Rational(coeff(rng));
        DensePoly p(std::move(c));
        CHECK(exact_quotient_by_square(square * p) == p);
    }
}

TEST_CASE("palindromic coefficients read the same reversed") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> deg(0, 25);
        PalPoly p = testing::random_rational_palpoly(rng, deg(rng));
        auto rev = p.coeffs();
        std::reverse(rev.begin(), rev.end());
        CHECK(rev == p.coeffs());
    }
}

TEST_CASE("product of palindromic polynomials is palindromic with summed index") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> deg(0, 12);
        PalPoly a = testing::random_rational_palpoly(rng, deg(rng));
        PalPoly b = testing::random_rational_palpoly(rng, deg(rng));
        PalPoly c = mul(a, b);  // construction re-validates palindromicity
        CHECK(c.index() == a.index() + b.index());
        CHECK(c.dense() == a.dense() * b.dense());
    }
}

TEST_CASE("eval at one is the coefficient sum; at zero the constant term") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> deg(0, 20);
        PalPoly p = testing::random_rational_palpoly(rng, deg(rng));
        Rational sum(0);
        for (const auto& c : p.coeffs()) sum += c;
        CHECK(p.eval(Rational(1)) == sum);
        CHECK(p.eval(Rational(0)) == p.coeff(0));
    }
}

TEST_CASE("exact division and gcd") {
    DensePoly a({-1, 0, 1});           // x^2 - 1
    DensePoly b({1, 1});               // x + 1
    CHECK(exact_divide(a, b) == DensePoly({-1, 1}));
    CHECK_THROWS_AS(exact_divide(DensePoly({1, 0, 1}), b), NotDivisible);

    CHECK(gcd_monic(a, b) == b);
    DensePoly c({Rational(2), Rational(2)});  // gcd should be monic
    CHECK(gcd_monic(a, c) == b);
    CHECK(gcd_monic(DensePoly({1, 0, 1}), DensePoly({-1, 1})).degree() == 0);
}

TEST_CASE("squarefree decomposition isolates multiplicities") {
    // (x+1)^2 (x-2)^3, leading coefficient 5
    DensePoly f = Rational(5) * (DensePoly({1, 1}) * DensePoly({1, 1}) * DensePoly({-2, 1}) * DensePoly({-2, 1}) *
                                 DensePoly({-2, 1}));
    auto factors = squarefree_decomposition(f);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == DensePoly({1, 1}));
    CHECK(factors[0].second == 2);
    CHECK(factors[1].first == DensePoly({-2, 1}));
    CHECK(factors[1].second == 3);

    // reassembles the monic part
    DensePoly prod = DensePoly::constant(Rational(1));
    for (const auto& [factor, mult] : factors)
        for (int k = 0; k < mult; ++k) prod = prod * factor;
    CHECK(prod == Rational(1, 5) * f);

    auto simple = squarefree_decomposition(DensePoly({1, 0, 1}));
    REQUIRE(simple.size() == 1);
    CHECK(simple[0].second == 1);
}
