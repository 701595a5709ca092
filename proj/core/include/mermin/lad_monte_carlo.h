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

#ifndef MERMIN_LAD_MONTE_CARLO_H
#define MERMIN_LAD_MONTE_CARLO_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mermin/chunked.h"
#include "mermin/core_types.h"
#include "mermin/rational.h"
#include "mermin/realm_matrix.h"

namespace mermin {

/// One run of the G9-vector generator driven through a functional relation.
struct McConfig {
    std::string relation = "23";
    std::uint64_t n_vectors = 1'000'000;
    /// Probability that each domain coordinate is -1; the two are drawn independently.
    double p_minus = 0.25;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on n_vectors == 0 or p_minus outside [0, 1].
    void validate() const;
};

/// Number of -1 results per setting pair over n_vectors generated G9 vectors.
struct TallyTable {
    std::array<std::uint64_t, kNumPairs> counts{};
    std::uint64_t n_vectors = 0;
    McConfig config;
    std::uint64_t chunk_size = 0;
    /// How often each realm-matrix column was drawn.
    std::array<std::uint64_t, kNumG9Columns> column_draws{};

    std::uint64_t count(const SettingPair &p) const { return counts[p.slot()]; }
};

/// Throws std::invalid_argument for an invalid config or unknown relation label.
TallyTable run_simulation(const McConfig &cfg, const ExecutionOptions &opts = {});

/// Sum of the six case (b) counts over 6n.
double case_b_same_fraction(const TallyTable &t);
Rational case_b_same_fraction_exact(const TallyTable &t);

/// Probability of drawing each column for relation `label` at a given p_minus.
std::array<Rational, kNumG9Columns> expected_column_probabilities(const FunctionalRelation &r, Rational p_minus);

/// Expected case (b) same fraction: p^2 from the all -1 column plus 1/3 of the rest.
Rational expected_case_b_same_fraction(Rational p_minus);

/// One tally per relation in label order; relation i is seeded with
/// derive_seed(seed, label).
std::vector<TallyTable> run_all_relations(std::uint64_t n_vectors, double p_minus, std::uint64_t seed,
                                          const ExecutionOptions &opts = {});

/// Header row of pair labels, one row of counts.
std::string tally_to_csv(const TallyTable &t);
nlohmann::json tally_to_json(const TallyTable &t);
std::string tally_to_text(const TallyTable &t);

/// One row per relation: relation,seed,11..33,case_b_fraction.
std::string tallies_to_csv(const std::vector<TallyTable> &tables);

}  // namespace mermin

#endif
