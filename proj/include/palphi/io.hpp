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

#ifndef PALPHI_IO_HPP
#define PALPHI_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "palphi/conjectures.hpp"
#include "palphi/polynomials.hpp"
#include "palphi/roots.hpp"
#include "palphi/sequences.hpp"
#include "palphi/spectral.hpp"

namespace palphi {

/// Text format "c0,c1,...,cd@d"; coefficients are integers or p/q literals.
PalPoly parse_palpoly(std::string_view text);
std::string format_palpoly(const PalPoly& p);

/// Human-oriented rendering like "34x^6 + 68x^5 + ... + 34".
std::string format_pretty(const PalPoly& p);

/// { "index": d, "coeffs": ["c0", ..., "cd"] }
nlohmann::json palpoly_to_json(const PalPoly& p);
PalPoly palpoly_from_json(const nlohmann::json& j);

/// "k,value" rows; integral values as plain digits, others as p/q, never
/// rounded.
std::string coeffs_csv(const PalPoly& p);

/// "re,im,modulus_deviation" rows.
std::string root_report_csv(const RootReport& report);
nlohmann::json root_report_to_json(const RootReport& report);

/// "checkpoint,sup_deviation,e_estimate,b_estimate" rows.
std::string profile_report_csv(const ProfileReport& report);
nlohmann::json profile_report_to_json(const ProfileReport& report);

nlohmann::json lattice_report_to_json(const LatticeReport& report);

/// { n, matrix, det, predicted, match, counterexamples: [...] }
nlohmann::json det_check_to_json(int n, const DetCheck& check);
nlohmann::json divisibility_sweep_to_json(const DivisibilitySweep& sweep);

nlohmann::json salie_table_to_json(const SalieTable& table);

}  // namespace palphi

#endif
