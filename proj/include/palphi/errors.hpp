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

#ifndef PALPHI_ERRORS_HPP
#define PALPHI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace palphi {

/// Base class for all palphi error conditions.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A coefficient sequence violates p_j = p_{d-j}.
class NotPalindromic : public Error {
   public:
    explicit NotPalindromic(const std::string& what) : Error(what) {}
};

/// Coefficient count does not match index+1.
class LengthMismatch : public Error {
   public:
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

/// An exact polynomial or integer division left a remainder.
class NotDivisible : public Error {
   public:
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

/// A formula expected to produce an integer produced a proper fraction.
class NonInteger : public Error {
   public:
    explicit NonInteger(const std::string& what) : Error(what) {}
};

/// The iterative root finder ran out of iterations.
class NoConvergence : public Error {
   public:
    NoConvergence(const std::string& what, int iters) : Error(what), max_iters(iters) {}
    int max_iters;
};

/// An exact defining identity failed to reduce to zero.
class ValidationFailed : public Error {
   public:
    explicit ValidationFailed(const std::string& what) : Error(what) {}
};

/// A 2-adic divisibility counterexample; carries its coordinates.
class DivisibilityCounterexample : public Error {
   public:
    DivisibilityCounterexample(const std::string& what, int i_, int j_, std::string rho_value_)
        : Error(what), i(i_), j(j_), rho_value(std::move(rho_value_)) {}
    int i;
    int j;
    std::string rho_value;
};

/// A requested sequence fixture file is absent.
class FixtureMissing : public Error {
   public:
    explicit FixtureMissing(const std::string& what) : Error(what) {}
};

/// Network fetch was requested but could not be completed.
class NetworkUnavailable : public Error {
   public:
    explicit NetworkUnavailable(const std::string& what) : Error(what) {}
};

}  // namespace palphi

#endif
