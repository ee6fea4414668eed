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

#ifndef PALPHI_OEIS_HPP
#define PALPHI_OEIS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "palphi/sequences.hpp"

namespace palphi {

/// Parsed b-file: one "index value" pair per line, '#' comments ignored.
struct BFile {
    std::string id;
    long offset = 0;
    std::vector<Integer> values;
};

/// Fixture directory: $PALPHI_FIXTURES when set, else the compiled-in
/// default (the repository's fixtures/ directory).
std::filesystem::path fixture_dir();

BFile load_bfile(const std::filesystem::path& path);

/// Local fixture for an id like "A002105" (file fixtures/b002105.txt).
/// Throws FixtureMissing when absent.
BFile load_fixture(const std::string& id);

enum class CrossCheckMode { Fixture, Network };

struct CrossCheckReport {
    std::string sequence_id;
    long compared = 0;
    struct Mismatch {
        long index = 0;
        std::string ours;
        std::string theirs;
    };
    std::vector<Mismatch> mismatches;
    std::string source;  // "fixture" or "network"
    std::string note;
    bool ok() const { return mismatches.empty(); }
};

/// Aligns by offset and compares the overlap only; never extrapolates either
/// side.
CrossCheckReport oeis_crosscheck(const std::string& id, const SequenceTable& ours, CrossCheckMode mode);

/// Generates our values for a paper-cited sequence id. `count` bounds the
/// number of produced terms. Unknown ids throw std::invalid_argument.
SequenceTable sequence_for_id(const std::string& id, int count);

std::vector<std::string> registered_ids();

/// Sliding-window comparison for the hedged Salie-triangle id A065547: our
/// row-major table stream is scanned against the fixture at every alignment
/// and the best-matching offset is reported. Soft: the report records the
/// result, callers decide what to make of it.
CrossCheckReport salie_best_offset_report(const SalieTable& table, CrossCheckMode mode);

/// Fetches https://oeis.org/AXXXXXX/bXXXXXX.txt and caches it alongside the
/// fixtures. Throws NetworkUnavailable on any failure.
BFile fetch_bfile_network(const std::string& id);

}  // namespace palphi

#endif
