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

#include "palphi/io.hpp"

#include <sstream>
#include <stdexcept>

namespace palphi {

PalPoly parse_palpoly(std::string_view text) {
    const auto at = text.rfind('@');
    if (at == std::string_view::npos)
        throw std::invalid_argument("polynomial literal must look like \"c0,c1,...,cd@d\"");
    const std::string index_str{text.substr(at + 1)};
    int index = 0;
    try {
        size_t used = 0;
        index = std::stoi(index_str, &used);
        if (used != index_str.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad index '" + index_str + "' in polynomial literal");
    }
    std::vector<Rational> coeffs;
    std::string_view body = text.substr(0, at);
    while (!body.empty()) {
        const auto comma = body.find(',');
        coeffs.push_back(rational_from_string(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return make_palpoly(std::move(coeffs), index);
}

std::string format_palpoly(const PalPoly& p) {
    std::string out;
    for (size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ',';
        out += rational_to_string(p.coeffs()[k]);
    }
    out += '@';
    out += std::to_string(p.index());
    return out;
}

std::string format_pretty(const PalPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.index(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (c == 0) continue;
        const bool first = out.empty();
        const bool negative = c < 0;
        Rational a = abs(c);
        if (!first) out += negative ? " - " : " + ";
        if (first && negative) out += "-";
        const bool unit = a == 1 && k != 0;
        if (!unit) out += rational_to_string(a);
        if (k > 0) {
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

nlohmann::json palpoly_to_json(const PalPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
    return {{"index", p.index()}, {"coeffs", coeffs}};
}

PalPoly palpoly_from_json(const nlohmann::json& j) {
    const int index = j.at("index").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return make_palpoly(std::move(coeffs), index);
}

std::string coeffs_csv(const PalPoly& p) {
    std::string out = "k,value\n";
    for (size_t k = 0; k < p.coeffs().size(); ++k)
        out += std::to_string(k) + "," + rational_to_string(p.coeffs()[k]) + "\n";
    return out;
}

namespace {
std::string double_str(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}
}  // namespace

std::string root_report_csv(const RootReport& report) {
    std::string out = "re,im,modulus_deviation\n";
    for (size_t k = 0; k < report.roots.size(); ++k)
        out += double_str(report.roots[k].real()) + "," + double_str(report.roots[k].imag()) + "," +
               double_str(report.modulus_deviation[k]) + "\n";
    return out;
}

nlohmann::json root_report_to_json(const RootReport& report) {
    nlohmann::json roots = nlohmann::json::array();
    for (size_t k = 0; k < report.roots.size(); ++k)
        roots.push_back({{"re", report.roots[k].real()},
                         {"im", report.roots[k].imag()},
                         {"modulus_deviation", report.modulus_deviation[k]},
                         {"residual", report.residual[k]}});
    return {{"roots", roots},
            {"max_modulus_deviation", report.max_modulus_deviation},
            {"max_residual", report.max_residual},
            {"iterations", report.iterations}};
}

std::string profile_report_csv(const ProfileReport& report) {
    std::string out = "checkpoint,sup_deviation,e_estimate,b_estimate\n";
    for (size_t k = 0; k < report.checkpoints.size(); ++k)
        out += std::to_string(report.checkpoints[k]) + "," + double_str(report.sup_deviation[k]) + "," +
               double_str(report.e_estimate) + "," + double_str(report.b_estimate) + "\n";
    return out;
}

nlohmann::json profile_report_to_json(const ProfileReport& report) {
    return {{"d", report.d_param},
            {"delta", report.delta},
            {"checkpoints", report.checkpoints},
            {"sup_deviation", report.sup_deviation},
            {"e_estimate", report.e_estimate},
            {"b_estimate", report.b_estimate},
            {"c_estimate", report.c_estimate},
            {"fit_window", report.fit_window}};
}

nlohmann::json lattice_report_to_json(const LatticeReport& report) {
    nlohmann::json matches = nlohmann::json::array();
    for (const auto& m : report.matches)
        matches.push_back({{"re", m.root.real()},
                           {"im", m.root.imag()},
                           {"lattice_index", m.lattice_index},
                           {"distance", m.distance}});
    return {{"n", report.n},
            {"matches", matches},
            {"unmatched_lattice", report.unmatched_lattice},
            {"max_distance", report.max_distance},
            {"mean_distance", report.mean_distance}};
}

nlohmann::json det_check_to_json(int n, const DetCheck& check) {
    nlohmann::json matrix = nlohmann::json::array();
    RhoMatrix m = build_M(n);
    for (const auto& row : m.entries) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& e : row) jrow.push_back(e.get_str());
        matrix.push_back(jrow);
    }
    return {{"n", n},
            {"matrix", matrix},
            {"det", check.det.get_str()},
            {"predicted", check.predicted.get_str()},
            {"match", check.match},
            {"counterexamples", nlohmann::json::array()}};
}

nlohmann::json divisibility_sweep_to_json(const DivisibilitySweep& sweep) {
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const auto& c : sweep.counterexamples)
        counterexamples.push_back({{"i", c.i}, {"j", c.j}, {"rho", rational_to_string(c.rho_value)}});
    return {{"max_i", sweep.max_i},
            {"max_j", sweep.max_j},
            {"checked", sweep.checked},
            {"ok", sweep.ok()},
            {"counterexamples", counterexamples}};
}

nlohmann::json salie_table_to_json(const SalieTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.entries) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& e : row) jrow.push_back(rational_to_string(e));
        rows.push_back(jrow);
    }
    nlohmann::json flagged = nlohmann::json::array();
    for (const auto& [i, j] : table.non_integral) flagged.push_back({{"i", i}, {"j", j}});
    return {{"rows", table.rows}, {"cols", table.cols}, {"entries", rows}, {"non_integral", flagged}};
}

}  // namespace palphi
