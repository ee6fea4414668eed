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

#include "palphi/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef PALPHI_HAVE_OPENSSL
#include <httplib.h>
#endif

#ifndef PALPHI_DEFAULT_FIXTURE_DIR
#define PALPHI_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace palphi {

std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("PALPHI_FIXTURES"); env && *env) return std::filesystem::path(env);
    return std::filesystem::path(PALPHI_DEFAULT_FIXTURE_DIR);
}

BFile load_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureMissing("cannot open b-file " + path.string());
    BFile bf;
    bf.id = path.stem().string();
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long index = 0;
        std::string value;
        if (!(ls >> index >> value)) continue;
        if (first) {
            bf.offset = index;
            first = false;
        }
        bf.values.emplace_back(value);
    }
    return bf;
}

namespace {

std::string bfile_name(const std::string& id) {
    // "A002105" -> "b002105.txt"
    std::string digits = id;
    if (!digits.empty() && (digits.front() == 'A' || digits.front() == 'a')) digits.erase(0, 1);
    while (digits.size() < 6) digits.insert(digits.begin(), '0');
    return "b" + digits + ".txt";
}

std::string canonical_id(const std::string& id) {
    std::string digits = id;
    if (!digits.empty() && (digits.front() == 'A' || digits.front() == 'a')) digits.erase(0, 1);
    while (digits.size() < 6) digits.insert(digits.begin(), '0');
    return "A" + digits;
}

}  // namespace

BFile load_fixture(const std::string& id) {
    const auto path = fixture_dir() / bfile_name(id);
    if (!std::filesystem::exists(path))
        throw FixtureMissing("fixture " + path.string() + " for " + canonical_id(id) +
                             " not found (set PALPHI_FIXTURES or fetch with --online)");
    BFile bf = load_bfile(path);
    bf.id = canonical_id(id);
    return bf;
}

CrossCheckReport oeis_crosscheck(const std::string& id, const SequenceTable& ours, CrossCheckMode mode) {
    CrossCheckReport report;
    report.sequence_id = canonical_id(id);
    BFile theirs = mode == CrossCheckMode::Network ? fetch_bfile_network(id) : load_fixture(id);
    report.source = mode == CrossCheckMode::Network ? "network" : "fixture";

    const long lo = std::max(ours.offset, theirs.offset);
    const long ours_end = ours.offset + static_cast<long>(ours.values.size());
    const long theirs_end = theirs.offset + static_cast<long>(theirs.values.size());
    const long hi = std::min(ours_end, theirs_end);
    for (long idx = lo; idx < hi; ++idx) {
        const Rational& a = ours.values[static_cast<size_t>(idx - ours.offset)];
        const Integer& b = theirs.values[static_cast<size_t>(idx - theirs.offset)];
        ++report.compared;
        if (a != Rational(b))
            report.mismatches.push_back({idx, rational_to_string(a), b.get_str()});
    }
    return report;
}

SequenceTable sequence_for_id(const std::string& id, int count) {
    const std::string cid = canonical_id(id);
    SequenceTable table;
    table.name = cid;
    if (cid == "A002105") {
        table.offset = 1;
        for (int n = 1; n <= count; ++n) table.values.emplace_back(reduced_tangent(n));
    } else if (cid == "A001469") {
        table.offset = 1;
        for (int n = 1; n <= count; ++n) table.values.emplace_back(genocchi(n));
    } else if (cid == "A000364") {
        table.offset = 0;
        for (int j = 0; j < count; ++j) table.values.push_back(euler_via_rho(j, Parity::Even));
    } else if (cid == "A009843") {
        table.offset = 0;
        for (int j = 0; j < count; ++j) table.values.push_back(euler_via_rho(j, Parity::Odd));
    } else if (cid == "A007070") {
        // Constant terms of the Phi_1 orbit of x, skipping the seed's 0.
        table.offset = 0;
        auto streams = phi1_index2_table(count);
        for (size_t k = 1; k < streams.constants.values.size(); ++k)
            table.values.push_back(streams.constants.values[k]);
    } else if (cid == "A006012") {
        table.offset = 0;
        auto streams = phi1_index2_table(count - 1);
        table.values = streams.middles.values;
    } else if (cid == "A008301") {
        // Poupard triangle read by rows, linearized.
        table.offset = 1;
        for (int n = 1; static_cast<int>(table.values.size()) < count; ++n) {
            PalPoly f = poupard(n);
            for (const auto& c : f.coeffs()) {
                table.values.push_back(c);
                if (static_cast<int>(table.values.size()) == count) break;
            }
        }
    } else if (cid == "A065547") {
        table.offset = 1;
        SalieTable st = salie_table(6, 6);
        for (const auto& row : st.entries)
            for (const auto& e : row) table.values.push_back(e);
    } else {
        throw std::invalid_argument("no registered generator for sequence " + cid);
    }
    return table;
}

std::vector<std::string> registered_ids() {
    return {"A002105", "A001469", "A000364", "A009843", "A007070", "A006012", "A008301", "A065547"};
}

CrossCheckReport salie_best_offset_report(const SalieTable& table, CrossCheckMode mode) {
    CrossCheckReport report;
    report.sequence_id = "A065547";
    report.source = mode == CrossCheckMode::Network ? "network" : "fixture";

    std::vector<Rational> ours;
    for (const auto& row : table.entries)
        for (const auto& e : row) ours.push_back(e);

    BFile theirs = mode == CrossCheckMode::Network ? fetch_bfile_network("A065547") : load_fixture("A065547");
    if (theirs.values.size() < ours.size()) {
        report.note = "fixture shorter than our table; no alignment attempted";
        return report;
    }
    size_t best_shift = 0;
    long best_mismatches = -1;
    for (size_t shift = 0; shift + ours.size() <= theirs.values.size(); ++shift) {
        long mismatches = 0;
        for (size_t k = 0; k < ours.size(); ++k)
            if (ours[k] != Rational(theirs.values[shift + k])) ++mismatches;
        if (best_mismatches < 0 || mismatches < best_mismatches) {
            best_mismatches = mismatches;
            best_shift = shift;
        }
    }
    report.compared = static_cast<long>(ours.size());
    for (size_t k = 0; k < ours.size(); ++k)
        if (ours[k] != Rational(theirs.values[best_shift + k]))
            report.mismatches.push_back({static_cast<long>(k), rational_to_string(ours[k]),
                                         theirs.values[best_shift + k].get_str()});
    report.note = "best alignment at fixture position " + std::to_string(best_shift + static_cast<size_t>(theirs.offset)) +
                  " with " + std::to_string(best_mismatches) + " mismatching cells (row-major scan)";
    return report;
}

BFile fetch_bfile_network(const std::string& id) {
#ifdef PALPHI_HAVE_OPENSSL
    const std::string cid = canonical_id(id);
    const std::string path = "/" + cid + "/" + bfile_name(id);
    httplib::SSLClient client("oeis.org");
    client.set_connection_timeout(10);
    client.set_read_timeout(20);
    auto res = client.Get(path.c_str());
    if (!res || res->status != 200)
        throw NetworkUnavailable("could not fetch " + path + (res ? " (status " + std::to_string(res->status) + ")"
                                                                  : " (no response)"));
    const auto cache_path = fixture_dir() / bfile_name(id);
    std::ofstream out(cache_path);
    if (out) out << res->body;
    std::istringstream body(res->body);
    BFile bf;
    bf.id = cid;
    std::string line;
    bool first = true;
    while (std::getline(body, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long index = 0;
        std::string value;
        if (!(ls >> index >> value)) continue;
        if (first) {
            bf.offset = index;
            first = false;
        }
        bf.values.emplace_back(value);
    }
    return bf;
#else
    throw NetworkUnavailable("this build has no TLS support; network fetch of " + id + " unavailable");
#endif
}

}  // namespace palphi
