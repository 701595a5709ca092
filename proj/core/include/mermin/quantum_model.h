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

#ifndef MERMIN_QUANTUM_MODEL_H
#define MERMIN_QUANTUM_MODEL_H

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mermin/chunked.h"
#include "mermin/core_types.h"
#include "mermin/facts_report.h"
#include "mermin/rational.h"
#include "mermin/rng.h"

namespace mermin {

// Singlet-state statistics of the Mermin device. R is Alice-up / Bob-down.

struct JointOutcome {
    Color alice;
    Color bob;

    bool same() const noexcept { return alice == bob; }
    friend auto operator<=>(const JointOutcome &, const JointOutcome &) = default;
};

/// RR, RG, GR, GG, the order used by the sampler's cumulative table.
inline constexpr std::array<JointOutcome, 4> kAllOutcomes{{
    {Color::R, Color::R},
    {Color::R, Color::G},
    {Color::G, Color::R},
    {Color::G, Color::G},
}};

/// 1/2 cos^2(theta/2) for like colours, 1/2 sin^2(theta/2) for unlike.
double joint_probability(JointOutcome outcome, Angle theta) noexcept;

/// Same law in exact arithmetic. cos(theta) must be rational, i.e. theta is one of
/// 0, 60, 90, 120, 180 degrees; throws std::domain_error otherwise.
Rational joint_probability_exact(JointOutcome outcome, Angle theta);

JointOutcome sample_trial(const SettingPair &pair, Rng &rng);

struct TrialRecord {
    SettingPair pair;
    JointOutcome outcome;
    std::uint64_t trial_index;
};

/// How Alice and Bob choose settings each trial.
struct SelectionPolicy {
    std::optional<SettingPair> fixed;  // nullopt: both pick uniformly and independently

    static SelectionPolicy uniform() { return {}; }
    static SelectionPolicy fixed_pair(SettingPair p) { return {p}; }
    std::string describe() const;
};

/// Draws the setting pair for one trial under `policy`.
SettingPair select_pair(const SelectionPolicy &policy, Rng &rng);

/// Individual trial records; intended for small runs and exports.
std::vector<TrialRecord> sample_trial_records(std::uint64_t n_trials, const SelectionPolicy &policy,
                                              std::uint64_t seed, const ExecutionOptions &opts = {});

/// Throws std::invalid_argument when n_trials == 0.
FactsReport run_quantum_experiment(std::uint64_t n_trials, const SelectionPolicy &policy, std::uint64_t seed,
                                   const ExecutionOptions &opts = {});

}  // namespace mermin

#endif
