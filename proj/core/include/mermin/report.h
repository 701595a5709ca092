// Copyright 2026 The Mermin Device Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MERMIN_REPORT_H
#define MERMIN_REPORT_H

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mermin/analysis.h"
#include "mermin/chunked.h"
#include "mermin/facts_report.h"
#include "mermin/lad_monte_carlo.h"
#include "mermin/local_realism.h"
#include "mermin/realm_matrix.h"

namespace mermin {

/// Per-relation results of the Monte Carlo half of the report.
struct RelationResult {
    TallyTable tally;
    DistributionCounts recovered;
    SameDifferent same_different;
    CaseBDecomposition decomposition;
    HullVerdict hull;
};

/// Everything the adjudication needs, in one place. Sections are filled in a
/// fixed order so that equal (seed, n) give byte-identical renderings.
struct FullReport {
    std::uint64_t seed = 0;
    std::uint64_t n_vectors = 0;
    std::uint64_t n_trials = 0;

    FactsReport quantum;
    /// Case (b) agreement of each instruction set.
    std::vector<std::pair<InstructionSet, Rational>> set_agreement;
    SetDistribution one_one_two;
    std::array<Rational, kNumPairs> one_one_two_fractions{};
    Rational one_one_two_case_b;
    FactsReport one_one_two_simulated;
    SuperdetScenario superdet;
    FactsReport superdet_simulated;
    RealmMatrixR94 realm;
    std::vector<FunctionalRelation> relations;
    std::vector<std::pair<int, int>> excluded_pairs;
    std::vector<RelationResult> monte_carlo;
    Rational expected_case_b;
    DistributionCounts published_relation23;
    SameDifferent published_relation23_ratio;
    HullVerdict hull_quantum;
    HullVerdict hull_lad;
};

/// Runs every component. `n_vectors` sizes each Monte Carlo run; device runs
/// use 9 * n_vectors trials. Sub-runs are seeded with derive_seed(seed, name).
FullReport full_report(std::uint64_t seed, std::uint64_t n_vectors = 1'000'000, const ExecutionOptions &opts = {});

nlohmann::json to_json(const FullReport &r);
std::string to_markdown(const FullReport &r);
/// (file name, CSV content) per table.
std::vector<std::pair<std::string, std::string>> to_csv_tables(const FullReport &r);

/// Fractions of the 1:1:2 table, rendered like the per-pair tables elsewhere.
std::string fractions_to_csv(const std::array<Rational, kNumPairs> &fractions);
std::string fractions_to_text(const std::array<Rational, kNumPairs> &fractions);
std::string superdet_to_text(const SuperdetScenario &sc);
std::string superdet_to_csv(const SuperdetScenario &sc);
nlohmann::json superdet_to_json(const SuperdetScenario &sc);

}  // namespace mermin

#endif
