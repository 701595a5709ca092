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

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace mermin;
using mermin::testing::within_sigma;

namespace {

const JointOutcome RR{Color::R, Color::R};
const JointOutcome RG{Color::R, Color::G};
const JointOutcome GR{Color::G, Color::R};
const JointOutcome GG{Color::G, Color::G};

}  // namespace

TEST(JointProbability, exact_values) {
    EXPECT_EQ(joint_probability_exact(RR, Angle{0}), Rational(1, 2));
    EXPECT_EQ(joint_probability_exact(GG, Angle{0}), Rational(1, 2));
    EXPECT_EQ(joint_probability_exact(RR, Angle{120}), Rational(1, 8));
    EXPECT_EQ(joint_probability_exact(RG, Angle{120}), Rational(3, 8));
    EXPECT_EQ(joint_probability_exact(RG, Angle{0}), Rational(0));
    EXPECT_THROW(joint_probability_exact(RR, Angle{45}), std::domain_error);

    EXPECT_DOUBLE_EQ(joint_probability(RR, Angle{0}), 0.5);
    EXPECT_NEAR(joint_probability(RR, Angle{120}), 0.125, 1e-15);
    EXPECT_EQ(joint_probability(RG, Angle{0}), 0.0);
}

TEST(JointProbability, normalization_symmetry_marginals_exact) {
    for (int deg : {0, 60, 90, 120, 180}) {
        const Angle t{deg};
        Rational sum;
        for (const auto &o : kAllOutcomes) {
            sum += joint_probability_exact(o, t);
        }
        EXPECT_EQ(sum, Rational(1)) << deg;
        EXPECT_EQ(joint_probability_exact(RG, t), joint_probability_exact(GR, t));
        EXPECT_EQ(joint_probability_exact(RR, t), joint_probability_exact(GG, t));
        EXPECT_EQ(joint_probability_exact(RR, t) + joint_probability_exact(RG, t), Rational(1, 2));
    }
}

TEST(JointProbability, normalization_over_all_degrees) {
    for (int deg = 0; deg <= 180; ++deg) {
        const Angle t{deg};
        double sum = 0;
        for (const auto &o : kAllOutcomes) {
            sum += joint_probability(o, t);
        }
        EXPECT_NEAR(sum, 1.0, 1e-15);
        EXPECT_NEAR(joint_probability(RR, t) + joint_probability(RG, t), 0.5, 1e-15);
    }
}

TEST(SampleTrial, case_a_never_disagrees) {
    Rng rng(11);
    const SettingPair p11 = SettingPair::from_label("11");
    for (int i = 0; i < 100000; ++i) {
        EXPECT_TRUE(sample_trial(p11, rng).same());
    }
}

TEST(SampleTrial, pair_12_frequencies) {
    Rng rng(12);
    const SettingPair p = SettingPair::from_label("12");
    const std::uint64_t n = 1'000'000;
    std::uint64_t same = 0;
    std::uint64_t rr = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const JointOutcome o = sample_trial(p, rng);
        same += o.same();
        rr += o == RR;
    }
    EXPECT_TRUE(within_sigma(same, n, 0.25, 3)) << same;
    EXPECT_TRUE(within_sigma(rr, n, 0.125, 3)) << rr;
}

TEST(SampleTrial, every_outcome_within_four_sigma) {
    for (const auto &pair : all_pairs()) {
        const auto report = run_quantum_experiment(100'000, SelectionPolicy::fixed_pair(pair), 1000 + pair.index());
        const auto &c = report.tally.pairs[pair.slot()];
        const Angle t = settings_to_theta(pair);
        const std::uint64_t counts[] = {c.rr, c.rg, c.gr, c.gg};
        for (size_t k = 0; k < 4; ++k) {
            const double p = joint_probability(kAllOutcomes[k], t);
            if (p == 0.0) {
                EXPECT_EQ(counts[k], 0u);
            } else {
                EXPECT_TRUE(within_sigma(counts[k], 100'000, p, 4)) << pair.label() << " outcome " << k;
            }
        }
    }
}

TEST(RunQuantumExperiment, facts_one_and_two) {
    const auto r = run_quantum_experiment(900'000, SelectionPolicy::uniform(), 2024);
    EXPECT_EQ(r.n_trials, 900'000u);
    EXPECT_EQ(r.tally.total(), 900'000u);
    for (const auto &pair : all_pairs()) {
        if (classify(pair) == CaseLabel::A) {
            EXPECT_EQ(*r.same_fraction(pair.slot()), 1.0);
        }
        EXPECT_TRUE(within_sigma(r.tally.pairs[pair.slot()].total(), r.n_trials, 1.0 / 9, 4));
    }
    const auto b = r.case_b();
    EXPECT_TRUE(within_sigma(b.same, b.trials, 0.25, 3)) << *b.fraction();
    EXPECT_EQ(r.case_a().fraction(), 1.0);
}

TEST(RunQuantumExperiment, single_trial_fixed_pair) {
    const auto r = run_quantum_experiment(1, SelectionPolicy::fixed_pair(SettingPair::from_label("22")), 5);
    EXPECT_EQ(r.n_trials, 1u);
    const auto &c = r.tally.pairs[SettingPair::from_label("22").slot()];
    EXPECT_EQ(c.total(), 1u);
    EXPECT_EQ(c.rg + c.gr, 0u);
    EXPECT_EQ(*r.same_fraction(4), 1.0);
    EXPECT_EQ(r.policy, "fixed:22");
}

TEST(RunQuantumExperiment, rejects_zero_trials) {
    EXPECT_THROW(run_quantum_experiment(0, SelectionPolicy::uniform(), 1), std::invalid_argument);
}

TEST(RunQuantumExperiment, reproducible_and_thread_independent) {
    const auto a = run_quantum_experiment(200'000, SelectionPolicy::uniform(), 77, {1, 10'000});
    const auto b = run_quantum_experiment(200'000, SelectionPolicy::uniform(), 77, {4, 10'000});
    EXPECT_EQ(to_json(a), to_json(b));
    const auto c = run_quantum_experiment(200'000, SelectionPolicy::uniform(), 78, {1, 10'000});
    EXPECT_NE(to_json(a), to_json(c));
}

TEST(TrialRecords, indices_unique_and_consistent_with_report) {
    const auto records = sample_trial_records(50'000, SelectionPolicy::uniform(), 9, {1, 4096});
    ASSERT_EQ(records.size(), 50'000u);
    std::set<std::uint64_t> idx;
    PairTally tally;
    for (const auto &rec : records) {
        idx.insert(rec.trial_index);
        tally.pairs[rec.pair.slot()].add(rec.outcome.alice, rec.outcome.bob);
    }
    EXPECT_EQ(idx.size(), records.size());
    EXPECT_EQ(*idx.rbegin(), 49'999u);
    const auto report = run_quantum_experiment(50'000, SelectionPolicy::uniform(), 9, {1, 4096});
    for (int s = 0; s < kNumPairs; ++s) {
        EXPECT_EQ(tally.pairs[s], report.tally.pairs[s]);
    }
}

TEST(FactsReport, csv_layout) {
    const auto r = run_quantum_experiment(1000, SelectionPolicy::uniform(), 3);
    const std::string csv = to_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "pair,n,rr,rg,gr,gg,same_fraction");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
    const auto j = to_json(r);
    EXPECT_EQ(j["seed"], 3);
    EXPECT_EQ(j["generator"], "mt19937_64");
    EXPECT_EQ(j["pairs"].size(), 9u);
}
