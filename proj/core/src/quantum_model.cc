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

#include "mermin/quantum_model.h"

#include <cmath>
#include <stdexcept>

namespace mermin {

double joint_probability(JointOutcome outcome, Angle theta) noexcept {
    const double half = theta.radians() / 2.0;
    if (outcome.same()) {
        const double c = std::cos(half);
        return 0.5 * c * c;
    }
    const double s = std::sin(half);
    return 0.5 * s * s;
}

Rational joint_probability_exact(JointOutcome outcome, Angle theta) {
    Rational cos_theta;
    switch (theta.degrees) {
        case 0:
            cos_theta = 1;
            break;
        case 60:
            cos_theta = Rational(1, 2);
            break;
        case 90:
            cos_theta = 0;
            break;
        case 120:
            cos_theta = Rational(-1, 2);
            break;
        case 180:
            cos_theta = -1;
            break;
        default:
            throw std::domain_error("no exact probability at " + std::to_string(theta.degrees) + " degrees");
    }
    // cos^2(x/2) = (1 + cos x) / 2, sin^2(x/2) = (1 - cos x) / 2
    const Rational half(1, 2);
    return outcome.same() ? half * (1 + cos_theta) * half : half * (1 - cos_theta) * half;
}

JointOutcome sample_trial(const SettingPair &pair, Rng &rng) {
    const Angle theta = settings_to_theta(pair);
    const double u = rng.uniform01();
    double cumulative = 0.0;
    for (size_t i = 0; i + 1 < kAllOutcomes.size(); ++i) {
        cumulative += joint_probability(kAllOutcomes[i], theta);
        if (u < cumulative) {
            return kAllOutcomes[i];
        }
    }
    return kAllOutcomes.back();
}

std::string SelectionPolicy::describe() const { return fixed ? "fixed:" + fixed->label() : "uniform"; }

SettingPair select_pair(const SelectionPolicy &policy, Rng &rng) {
    if (policy.fixed) {
        return *policy.fixed;
    }
    return all_pairs()[rng.uniform_below(kNumPairs)];
}

namespace {

struct RecordChunk {
    std::vector<TrialRecord> records;
    RecordChunk &operator+=(const RecordChunk &other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
        return *this;
    }
};

}  // namespace

std::vector<TrialRecord> sample_trial_records(std::uint64_t n_trials, const SelectionPolicy &policy,
                                              std::uint64_t seed, const ExecutionOptions &opts) {
    auto all = run_chunked<RecordChunk>(
        n_trials, seed, opts, [&](Rng &rng, std::uint64_t begin, std::uint64_t count, RecordChunk &acc) {
            acc.records.reserve(count);
            for (std::uint64_t i = 0; i < count; ++i) {
                SettingPair pair = select_pair(policy, rng);
                acc.records.push_back({pair, sample_trial(pair, rng), begin + i});
            }
        });
    return std::move(all.records);
}

FactsReport run_quantum_experiment(std::uint64_t n_trials, const SelectionPolicy &policy, std::uint64_t seed,
                                   const ExecutionOptions &opts) {
    if (n_trials == 0) {
        throw std::invalid_argument("n_trials must be at least 1");
    }
    FactsReport report;
    report.model = "quantum";
    report.policy = policy.describe();
    report.seed = seed;
    report.generator = std::string(Rng::kName);
    report.chunk_size = opts.chunk_size;
    report.n_trials = n_trials;
    report.tally = run_chunked<PairTally>(
        n_trials, seed, opts, [&](Rng &rng, std::uint64_t, std::uint64_t count, PairTally &acc) {
            for (std::uint64_t i = 0; i < count; ++i) {
                SettingPair pair = select_pair(policy, rng);
                JointOutcome o = sample_trial(pair, rng);
                acc.pairs[pair.slot()].add(o.alice, o.bob);
            }
        });
    return report;
}

}  // namespace mermin
