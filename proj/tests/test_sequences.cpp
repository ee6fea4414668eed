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

#include "palphi/sequences.hpp"

using namespace palphi;

TEST_CASE("poupard family start") {
    CHECK(poupard(1) == make_palpoly({1}, 0));
    CHECK(poupard(2) == make_palpoly({1, 2, 1}, 2));
    CHECK(poupard(3) == make_palpoly({4, 8, 10, 8, 4}, 4));
    CHECK(poupard(4) == make_palpoly({34, 68, 94, 104, 94, 68, 34}, 6));
    CHECK(poupard(12).index() == 22);
}

TEST_CASE("kreweras family start") {
    CHECK(kreweras(1) == make_palpoly({1, 1}, 1));
    CHECK(kreweras(2) == make_palpoly({2, 4, 4, 2}, 3));
    CHECK(kreweras(3) == make_palpoly({12, 24, 32, 32, 24, 12}, 5));
    CHECK(kreweras(4) == make_palpoly({136, 272, 384, 448, 448, 384, 272, 136}, 7));
}

TEST_CASE("bernoulli numbers and the defining convolution") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));  // documented convention
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(12) == Rational(-691, 2730));

    // Independent oracle: sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1.
    for (int n = 1; n <= 64; ++n) {
        Rational acc(0);
        for (int k = 0; k <= n; ++k)
            acc += Rational(binomial(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(k))) * bernoulli(k);
        CHECK(acc == 0);
    }
}

TEST_CASE("reduced tangent numbers") {
    CHECK(reduced_tangent(1) == 1);
    CHECK(reduced_tangent(2) == 1);
    CHECK(reduced_tangent(3) == 4);
    CHECK(reduced_tangent(4) == 34);
    CHECK(reduced_tangent(5) == 496);
    CHECK(reduced_tangent(6) == 11056);
    CHECK(reduced_tangent(9) == 819786496);
}

TEST_CASE("poupard constant terms are reduced tangent numbers") {
    for (int n = 1; n <= 30; ++n) CHECK(poupard(n).coeff(0) == Rational(reduced_tangent(n)));
}

TEST_CASE("poupard functional relation F_{n+1}(0) = F_n(1)") {
    for (int n = 1; n <= 25; ++n) CHECK(poupard(n + 1).coeff(0) == poupard(n).at_one());
}

TEST_CASE("genocchi numbers") {
    CHECK(genocchi(1) == 1);
    CHECK(genocchi(2) == 1);
    CHECK(genocchi(3) == 3);
    CHECK(genocchi(4) == 17);
    CHECK(genocchi(5) == 155);
    CHECK(genocchi(6) == 2073);
}

TEST_CASE("kreweras quotient polynomials") {
    CHECK(kreweras_reduced(1) == make_palpoly({1}, 0));
    CHECK(kreweras_reduced(2) == make_palpoly({1, 1, 1}, 2));
    CHECK(kreweras_reduced(3).coeff(0) == 3);
    for (int n = 1; n <= 20; ++n) {
        // 2^{n-1} divides every coefficient of G_n (checked inside), and the
        // constant term of the quotient is the n-th Genocchi number.
        CHECK(kreweras_reduced(n).coeff(0) == Rational(genocchi(n)));
    }
}

TEST_CASE("power of two content of kreweras polynomials") {
    for (int n = 1; n <= 20; ++n) {
        const Integer denom = pow2(static_cast<unsigned long>(n - 1));
        for (const auto& c : kreweras(n).coeffs()) {
            REQUIRE(is_integer(c));
            CHECK(divides(denom, to_integer(c)));
        }
    }
}

TEST_CASE("rho triangle rebuilds the poupard family") {
    auto [q0, p0] = rho_triangle_Q(0);
    CHECK(p0 == make_palpoly({1}, 0));
    auto [q1, p1] = rho_triangle_Q(1);
    CHECK(p1 == poupard(2));
    auto [q3, p3] = rho_triangle_Q(3);
    CHECK(p3 == poupard(4));
    for (int n = 0; n <= 10; ++n) CHECK(rho_triangle_Q(n).second == poupard(n + 1));
}

TEST_CASE("odd rho triangle rebuilds the kreweras family") {
    CHECK(rho_triangle_Qprime(1) == make_palpoly({1, 1}, 1));
    CHECK(rho_triangle_Qprime(2) == kreweras(2));
    CHECK(rho_triangle_Qprime(3) == kreweras(3));
    for (int n = 1; n <= 10; ++n) CHECK(rho_triangle_Qprime(n) == kreweras(n));
}

TEST_CASE("euler values through rho") {
    CHECK(euler_via_rho(0, Parity::Even) == 1);
    CHECK(euler_via_rho(1, Parity::Even) == 1);
    CHECK(euler_via_rho(2, Parity::Even) == 5);
    CHECK(euler_via_rho(3, Parity::Even) == 61);
    CHECK(euler_via_rho(4, Parity::Even) == 1385);
    CHECK(euler_via_rho(0, Parity::Odd) == 1);
    CHECK(euler_via_rho(1, Parity::Odd) == 3);
    CHECK(euler_via_rho(2, Parity::Odd) == 25);
    CHECK(euler_via_rho(3, Parity::Odd) == 427);
}

TEST_CASE("phi_1 index-2 table and its recurrence") {
    Phi1Index2Table table = phi1_index2_table(5);
    REQUIRE(table.constants.values.size() == 6);
    CHECK(table.constants.values[0] == 0);
    CHECK(table.constants.values[1] == 1);
    CHECK(table.constants.values[2] == 4);
    CHECK(table.constants.values[3] == 14);
    CHECK(table.constants.values[4] == 48);
    CHECK(table.constants.values[5] == 164);
    CHECK(table.middles.values[4] == 68);
    CHECK(table.middles.values[5] == 232);

    Phi1Index2Table fifty = phi1_index2_table(50);
    CHECK(satisfies_phi1_recurrence(fifty.constants));
    CHECK(satisfies_phi1_recurrence(fifty.middles));
}

TEST_CASE("salie-style table of normalized constant terms") {
    SalieTable table = salie_table(6, 6);
    CHECK(table.non_integral.empty());
    const long expected[6][6] = {
        {1, 1, 3, 17, 155, 2073},         {0, 1, 6, 55, 736, 13573},    {0, 1, 10, 135, 2492, 60605},
        {0, 1, 15, 280, 6818, 211419},    {0, 1, 21, 518, 16086, 619455}, {0, 1, 28, 882, 34020, 1592811},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(table.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] == Rational(expected[i][j]));
}
