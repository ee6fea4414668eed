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

#include "palphi/conjectures.hpp"

#include <stdexcept>
#include <string>

#include "palphi/operators.hpp"
#include "palphi/sequences.hpp"

namespace palphi {

DivisibilityResult rho_divisibility(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("rho_divisibility: need i, j >= 0");
    DivisibilityResult result;
    result.rho_value = rho(monomial_times_binomial_power(i, j));
    const Rational divisor{pow2(static_cast<unsigned long>(j / 2))};
    result.quotient = result.rho_value / divisor;
    result.holds = is_integer(result.quotient);
    return result;
}

RhoMatrix build_M(int n) {
    if (n < 1) throw std::invalid_argument("build_M: n must be >= 1");
    RhoMatrix m;
    m.n = n;
    m.entries.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = m.entries[static_cast<size_t>(i)];
        row.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            DivisibilityResult cell = rho_divisibility(i, j);
            if (!cell.holds)
                throw DivisibilityCounterexample("2^{floor(j/2)} does not divide rho(x^" + std::to_string(i) +
                                                     " (1+x)^" + std::to_string(j) + ") = " +
                                                     rational_to_string(cell.rho_value),
                                                 i, j, rational_to_string(cell.rho_value));
            row.push_back(to_integer(cell.quotient));
        }
    }
    return m;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Integer(1);
    int sign = 1;
    Integer prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Integer(0);
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer num = m[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                  m[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                              m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                  m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                // Bareiss guarantees exactness of this division.
                Integer q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw std::logic_error("fraction-free elimination lost exactness");
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = q;
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    Integer det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign < 0 ? Integer(-det) : det;
}

DetCheck det_check(int n) {
    if (n < 1) throw std::invalid_argument("det_check: n must be >= 1");
    DetCheck check;
    check.det = bareiss_determinant(build_M(n).entries);
    check.predicted = 1;
    for (int k = 1; k <= n - 1; ++k) {
        const unsigned long eps = (k % 2 == 1) ? 2 : 4;
        Integer f = factorial(static_cast<unsigned long>(n - k));
        Integer fp;
        mpz_pow_ui(fp.get_mpz_t(), f.get_mpz_t(), eps);
        check.predicted *= fp;
    }
    check.match = check.det == check.predicted;
    return check;
}

DivisibilitySweep divisibility_sweep(int max_i, int max_j) {
    DivisibilitySweep sweep;
    sweep.max_i = max_i;
    sweep.max_j = max_j;
    for (int i = 0; i <= max_i; ++i)
        for (int j = 0; j <= max_j; ++j) {
            DivisibilityResult cell = rho_divisibility(i, j);
            ++sweep.checked;
            if (!cell.holds) sweep.counterexamples.push_back({i, j, cell.rho_value});
        }
    return sweep;
}

}  // namespace palphi
