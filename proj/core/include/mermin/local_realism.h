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

#ifndef MERMIN_LOCAL_REALISM_H
#define MERMIN_LOCAL_REALISM_H

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mermin/chunked.h"
#include "mermin/core_types.h"
#include "mermin/facts_report.h"
#include "mermin/rational.h"

namespace mermin {

/// Colour a particle flashes at settings 1, 2 and 3. Both particles of a pair
/// carry the same set.
class InstructionSet {
   public:
    constexpr InstructionSet(Color c1, Color c2, Color c3) noexcept : colors_{c1, c2, c3} {}
    /// Parses "RRG" etc.; throws std::invalid_argument.
    static InstructionSet parse(std::string_view text);

    Color respond(Setting s) const noexcept { return colors_[s.value() - 1]; }
    InstructionSet mirror() const noexcept;
    /// False only for RRR and GGG.
    bool is_two_color() const noexcept;
    std::string name() const;

    friend auto operator<=>(const InstructionSet &, const InstructionSet &) = default;

   private:
    std::array<Color, 3> colors_;
};

/// The eight sets, ordered GGR, RRG, GRR, RGG, GRG, RGR, GGG, RRR.
const std::array<InstructionSet, 8> &all_instruction_sets() noexcept;

Color respond(const InstructionSet &s, Setting setting) noexcept;

/// Fraction of the six case (b) pairs at which both particles flash the same colour.
Rational case_b_agreement_fraction(const InstructionSet &s);

/// Weights over instruction sets. Weights may be raw counts; consumers normalise.
class SetDistribution {
   public:
    SetDistribution() = default;

    /// Adds to the set's weight. Throws std::invalid_argument on a negative weight.
    void add(const InstructionSet &s, Rational weight);
    Rational weight(const InstructionSet &s) const;
    Rational total() const;
    bool empty() const noexcept { return total_is_zero(); }
    const std::map<InstructionSet, Rational> &weights() const noexcept { return weights_; }

    /// Copy whose weights sum to exactly 1. Throws std::invalid_argument if empty.
    SetDistribution normalized() const;
    /// Every set carries the same weight as its mirror, which splits case (a)
    /// agreements evenly between RR and GG.
    bool is_mirror_balanced() const;
    SetDistribution mirrored() const;

    /// Grammar: SET:weight[,SET:weight...], weights as integers, p/q or decimals.
    /// Repeated sets accumulate.
    static SetDistribution parse(std::string_view text);
    /// Object form {"GGR": 1, "GRR": "1/2"}.
    static SetDistribution from_json(const nlohmann::json &j);
    nlohmann::json to_json() const;
    std::string to_string() const;

   private:
    bool total_is_zero() const;
    std::map<InstructionSet, Rational> weights_;
};

/// Exact same-colour fraction at each pair when every set is measured equally
/// at all nine pairs. Throws std::invalid_argument on an empty distribution.
std::array<Rational, kNumPairs> mixture_per_pair_fractions(const SetDistribution &d);

/// Same-colour fraction over all case (b) trials; never below 1/3.
Rational mixture_case_b_fraction(const SetDistribution &d);

/// Samples a set from d and a uniform pair each trial.
FactsReport simulate_instruction_sets(const SetDistribution &d, std::uint64_t n_trials, std::uint64_t seed,
                                      const ExecutionOptions &opts = {});

/// Instruction sets paired with set-dependent setting choices.
///
/// Only the six two-colour sets are produced (uniformly). Within case (b) each
/// set gives weight 2/8 to one disagreeing pair and its swap and 1/8 to the
/// other four pairs: RRG/GGR double 23 and 32, GRG/RGR double 12 and 21,
/// GRR/RGG double 13 and 31. Every pair is doubled by exactly one class, so
/// the pooled pair frequencies stay uniform while each set agrees on 1/4 of
/// its case (b) trials.
struct SuperdetScenario {
    std::vector<InstructionSet> sets;
    std::vector<Rational> production;
    /// Per set: weights over the nine slots, zero on case (a), summing to 1.
    std::vector<std::array<Rational, kNumPairs>> case_b_weighting;

    /// Probability of each pair given the set: 1/9 per case (a) pair, 2/3 of
    /// the case (b) weighting elsewhere.
    std::array<Rational, kNumPairs> conditional_pair_distribution(size_t set_index) const;
    std::array<Rational, kNumPairs> aggregate_pair_marginal() const;
    Rational case_b_same_fraction(size_t set_index) const;
    /// Same-colour fraction at each pair, aggregated over sets.
    std::array<Rational, kNumPairs> per_pair_same_fraction() const;
};

SuperdetScenario build_superdet_scenario();

FactsReport simulate_superdet(const SuperdetScenario &scenario, std::uint64_t n_trials, std::uint64_t seed,
                              const ExecutionOptions &opts = {});

}  // namespace mermin

#endif
