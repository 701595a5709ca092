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

#ifndef MERMIN_ANALYSIS_H
#define MERMIN_ANALYSIS_H

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mermin/core_types.h"
#include "mermin/lad_monte_carlo.h"
#include "mermin/rational.h"
#include "mermin/realm_matrix.h"

namespace mermin {

/// Occurrences of each realm-matrix column in a run of n vectors.
struct DistributionCounts {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t n3 = 0;
    std::int64_t n4 = 0;
    std::int64_t n = 0;

    std::int64_t two_color() const noexcept { return n2 + n3 + n4; }
    std::array<std::int64_t, kNumG9Columns> as_array() const noexcept { return {n1, n2, n3, n4}; }
    /// Throws std::invalid_argument unless all counts are nonnegative and sum to n.
    static DistributionCounts from_counts(std::array<std::int64_t, kNumG9Columns> counts);
    friend bool operator==(const DistributionCounts &, const DistributionCounts &) = default;
};

/// A tally that no mixture of G9 vectors can have produced.
class InconsistentTally : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Solves N1+N2 = c(12), N1+N3 = c(13), N1+N4 = c(23), N1+..+N4 = n.
/// Also requires c(21) = c(12), c(31) = c(13), c(32) = c(23) and case (a)
/// counts equal to n. Throws InconsistentTally otherwise or when the solution
/// is fractional or negative.
DistributionCounts recover_distribution(const std::array<std::uint64_t, kNumPairs> &counts, std::uint64_t n);
DistributionCounts recover_distribution(const TallyTable &t);

/// Exact -1 counts per pair implied by a distribution.
std::array<std::uint64_t, kNumPairs> synthesize_tally(const DistributionCounts &d);

/// Case (b) same and different outcomes after removing the all -1 column's
/// contribution.
struct SameDifferent {
    std::int64_t same = 0;
    std::int64_t different = 0;
    /// different / same; nullopt when only the all -1 column occurred.
    std::optional<Rational> ratio;
};

SameDifferent same_different_ratio(const DistributionCounts &d);

/// total = base + excess with base = 1/3 and excess = (2/3) n1 / n.
struct CaseBDecomposition {
    Rational base;
    Rational excess;
    Rational total;
};

/// Throws std::invalid_argument when n < 1.
CaseBDecomposition decompose_case_b_fraction(const DistributionCounts &d);

/// A point in per-pair agreement-fraction space.
struct HullQuery {
    std::array<Rational, kNumPairs> target{};

    /// Case (a) fractions 1, every case (b) fraction f.
    static HullQuery uniform_case_b(Rational f);
    /// From +/-1 expectations E (E = 1 - 2 f).
    static HullQuery from_expectations(const std::array<Rational, kNumPairs> &expectations);
    /// Empirical fractions count/n of a Monte Carlo tally.
    static HullQuery from_tally(const TallyTable &t);
};

struct HullVerdict {
    enum class Failure { None, NegativeWeight, Inconsistent };

    bool feasible = false;
    Failure failure = Failure::None;
    /// Unique solution of the equality system, present unless it is inconsistent.
    /// Equal to the convex weights when feasible.
    std::optional<std::array<Rational, kNumG9Columns>> weights;
    /// First column with a negative weight, or the pair slot (0..8, 9 for the
    /// normalisation row) whose equation is inconsistent.
    int violated_index = -1;
    /// Human-readable violated constraint, empty when feasible.
    std::string certificate;
};

/// Fraction vectors of the four realm-matrix columns: 1 where the column is -1.
std::array<std::array<Rational, kNumPairs>, kNumG9Columns> hull_vertices();

/// Decides whether q.target is a convex combination of hull_vertices().
/// Throws std::invalid_argument if a case (a) component differs from 1.
HullVerdict hull_membership(const HullQuery &q);

std::string to_string(const HullVerdict &v);
nlohmann::json to_json(const HullVerdict &v);
nlohmann::json to_json(const DistributionCounts &d);

/// Reference values published for Lad's simulation: the relation-23 tally and
/// the recovered column distributions for all twelve relations.
namespace lad_published {

inline constexpr std::uint64_t kVectors = 1'000'000;

inline constexpr std::array<std::uint64_t, kNumPairs> kRelation23Tally{
    1'000'000, 250'191, 250'332, 250'191, 1'000'000, 625'225, 250'332, 625'225, 1'000'000,
};

struct Distribution {
    const char *relation;
    std::array<std::int64_t, kNumG9Columns> counts;
};

inline constexpr std::array<Distribution, 12> kDistributions{{
    {"23", {62874, 187317, 187458, 562351}},
    {"26", {62527, 187114, 562974, 187385}},
    {"27", {62281, 187815, 187993, 561911}},
    {"28", {62754, 187434, 562506, 187306}},
    {"34", {62756, 188021, 187641, 561582}},
    {"36", {62561, 562898, 187288, 187253}},
    {"38", {62893, 561997, 187726, 187384}},
    {"46", {62410, 187683, 562462, 187445}},
    {"47", {62306, 187334, 187410, 562950}},
    {"48", {62276, 187207, 563382, 187135}},
    {"67", {62595, 562911, 187115, 187379}},
    {"78", {62454, 563037, 187282, 187227}},
}};

}  // namespace lad_published

}  // namespace mermin

#endif
