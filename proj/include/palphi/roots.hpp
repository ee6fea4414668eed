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

#ifndef PALPHI_ROOTS_HPP
#define PALPHI_ROOTS_HPP

#include <complex>
#include <vector>

#include "palphi/polynomials.hpp"

namespace palphi {

/// Exact coefficient-shape predicates. strictly_concave implies concave;
/// for nonnegative palindromic input, concave implies unimodal.
struct ShapeReport {
    bool unimodal = false;
    bool concave = false;
    bool strictly_concave = false;
};

/// Lakatos-Losonczi sufficient condition for all roots on the unit circle:
/// |p_d| >= (1/2) sum_{j=1}^{d-1} |p_j|. Exact rational comparison.
/// Pre: index >= 1.
bool lakatos_check(const PalPoly& p);

/// The concavity criterion 2 p_j >= p_{j-1} + p_{j+1} for all 0 <= j <= d
/// with the convention p_{-1} = p_{d+1} = 0; when it holds, all roots of the
/// palindromic polynomial lie on the unit circle. Exact.
bool concavity_criterion(const PalPoly& p);

/// Unimodality: coefficients nondecreasing up to the middle, nonincreasing
/// after. Concavity: interior second differences <= 0. Strict concavity:
/// every interior second difference < 0 (each point extremal). Exact.
ShapeReport shape_check(const PalPoly& p);

struct RootReport {
    std::vector<std::complex<double>> roots;
    /// | |z| - 1 | per root, and the maximum over roots.
    std::vector<double> modulus_deviation;
    double max_modulus_deviation = 0.0;
    /// Backward-error style residual |P(z)| / sum_k |c_k| |z|^k per root.
    std::vector<double> residual;
    double max_residual = 0.0;
    int iterations = 0;
};

/// All complex roots (with multiplicity; count = degree). The polynomial is
/// normalized by its largest |coefficient| in exact arithmetic before the
/// correctly rounded conversion to doubles. Multiple roots are isolated
/// beforehand by an exact square-free decomposition, so the simultaneous
/// iteration only ever sees simple roots and converges quadratically.
/// Roots at the origin (positive valuation) are reported directly.
/// Pre: P nonzero. Degree 0 yields an empty report.
/// Throws NoConvergence if the iteration does not settle in max_iters.
RootReport roots_numeric(const PalPoly& p, int max_iters = 500, double tol = 1e-12);

/// Same driver on raw complex coefficients (ascending, leading nonzero).
std::vector<std::complex<double>> aberth_roots(const std::vector<std::complex<double>>& coeffs, int max_iters,
                                               double tol, int* iterations_out = nullptr);

struct LatticeMatch {
    std::complex<double> root;
    int lattice_index = 0;  // k in exp(i pi (2k+1) / (2n))
    double distance = 0.0;
};

/// Matches each numeric root of the n-th Poupard polynomial to the nearest
/// root of x^{2n} + 1 and reports the lattice roots left unmatched (the
/// expected gap is the conjugate pair adjacent to angle 0).
struct LatticeReport {
    int n = 0;
    std::vector<LatticeMatch> matches;
    std::vector<int> unmatched_lattice;
    double max_distance = 0.0;
    double mean_distance = 0.0;
};

/// Pre: n >= 2.
LatticeReport compare_to_circle_lattice(int n, int max_iters = 500, double tol = 1e-12);

}  // namespace palphi

#endif
