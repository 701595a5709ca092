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

#include "mermin/lad_monte_carlo.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "mermin/analysis.h"
#include "test_util.h"

using namespace mermin;
using mermin::testing::within_sigma;

namespace {

std::uint64_t at(const TallyTable &t, const char *pair) { return t.count(SettingPair::from_label(pair)); }

}  // namespace

TEST(RunSimulation, relation_23_bands) {
    const auto t = run_simulation({"23", 1'000'000, 0.25, 4242});
    const std::uint64_t n = 1'000'000;
    for (const char *p : {"11", "22", "33"}) {
        EXPECT_EQ(at(t, p), n);
    }
    for (const char *p : {"12", "13", "21", "31"}) {
        EXPECT_TRUE(within_sigma(at(t, p), n, 0.25, 3)) << p << " " << at(t, p);
    }
    for (const char *p : {"23", "32"}) {
        EXPECT_TRUE(within_sigma(at(t, p), n, 0.625, 3)) << p << " " << at(t, p);
    }
    EXPECT_EQ(at(t, "12"), at(t, "21"));
    EXPECT_EQ(at(t, "23"), at(t, "32"));
    std::uint64_t draws = 0;
    for (auto d : t.column_draws) {
        draws += d;
    }
    EXPECT_EQ(draws, n);
}

TEST(RunSimulation, counts_follow_from_column_draws) {
    const auto rel = enumerate_functional_relations(build_realm_matrix());
    const auto m = build_realm_matrix();
    for (const auto &r : rel) {
        const auto t = run_simulation({r.label(), 20'000, 0.3, 5});
        for (int row = 1; row <= 9; ++row) {
            std::uint64_t minus = 0;
            for (int c = 0; c < kNumG9Columns; ++c) {
                if (m.value(row, c) == -1) {
                    minus += t.column_draws[c];
                }
            }
            EXPECT_EQ(t.counts[row - 1], minus) << r.label() << " row " << row;
        }
    }
}

TEST(RunSimulation, degenerate_probabilities) {
    const auto rel = enumerate_functional_relations(build_realm_matrix());
    const auto m = build_realm_matrix();
    for (const auto &r : rel) {
        const auto all_minus = run_simulation({r.label(), 1000, 1.0, 1});
        for (auto c : all_minus.counts) {
            EXPECT_EQ(c, 1000u);
        }
        const auto all_plus = run_simulation({r.label(), 1000, 0.0, 1});
        const int col = relation_column(r, +1, +1);
        for (int row = 1; row <= 9; ++row) {
            EXPECT_EQ(all_plus.counts[row - 1], m.value(row, col) == -1 ? 1000u : 0u) << r.label() << row;
        }
    }
    const auto t23 = run_simulation({"23", 1000, 0.0, 1});
    EXPECT_EQ(at(t23, "23"), 1000u);
    EXPECT_EQ(at(t23, "32"), 1000u);
    EXPECT_EQ(at(t23, "12"), 0u);
}

TEST(RunSimulation, rejects_bad_config) {
    EXPECT_THROW(run_simulation({"24", 10, 0.25, 1}), std::invalid_argument);
    EXPECT_THROW(run_simulation({"99", 10, 0.25, 1}), std::invalid_argument);
    EXPECT_THROW(run_simulation({"23", 0, 0.25, 1}), std::invalid_argument);
    EXPECT_THROW(run_simulation({"23", 10, 1.5, 1}), std::invalid_argument);
    EXPECT_THROW(run_simulation({"23", 10, -0.1, 1}), std::invalid_argument);
}

TEST(RunSimulation, thread_independent) {
    const McConfig cfg{"47", 300'000, 0.25, 8};
    const auto a = run_simulation(cfg, {1, 50'000});
    const auto b = run_simulation(cfg, {3, 50'000});
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.column_draws, b.column_draws);
    EXPECT_EQ(tally_to_csv(a), tally_to_csv(b));
}

TEST(CaseBFraction, published_tally) {
    TallyTable t;
    t.n_vectors = lad_published::kVectors;
    t.counts = lad_published::kRelation23Tally;
    EXPECT_NEAR(case_b_same_fraction(t), 0.375249, 5e-7);
    EXPECT_EQ(case_b_same_fraction_exact(t), Rational(2 * (250191 + 250332 + 625225), 6'000'000));
}

TEST(CaseBFraction, expectations) {
    EXPECT_EQ(expected_case_b_same_fraction(Rational(1, 4)), Rational(3, 8));
    EXPECT_EQ(expected_case_b_same_fraction(Rational(0)), Rational(1, 3));
    EXPECT_EQ(expected_case_b_same_fraction(Rational(1)), Rational(1));
    for (int k = 0; k <= 20; ++k) {
        const Rational p(k, 20);
        EXPECT_EQ(expected_case_b_same_fraction(p), p * p + (Rational(1) - p * p) / 3);
    }
    const auto rel = enumerate_functional_relations(build_realm_matrix());
    const auto probs = expected_column_probabilities(find_relation(rel, "23"), Rational(1, 4));
    EXPECT_EQ(probs[0], Rational(1, 16));
    EXPECT_EQ(probs[1], Rational(3, 16));
    EXPECT_EQ(probs[2], Rational(3, 16));
    EXPECT_EQ(probs[3], Rational(9, 16));
}

TEST(CaseBFraction, simulated_relation_23_near_three_eighths) {
    const auto t = run_simulation({"23", 1'000'000, 0.25, 99});
    EXPECT_NEAR(case_b_same_fraction(t), 0.375, 0.002);
}

TEST(RunAllRelations, labels_and_seeds) {
    const auto all = run_all_relations(50'000, 0.25, 7);
    ASSERT_EQ(all.size(), 12u);
    std::set<std::uint64_t> seeds;
    std::set<std::string> labels;
    for (const auto &t : all) {
        seeds.insert(t.config.seed);
        labels.insert(t.config.relation);
        EXPECT_EQ(t.n_vectors, 50'000u);
        EXPECT_EQ(t.config.seed, derive_seed(7, t.config.relation));
        EXPECT_NEAR(case_b_same_fraction(t), 0.375, 0.01);
    }
    EXPECT_EQ(seeds.size(), 12u);
    EXPECT_EQ(labels.size(), 12u);
    EXPECT_EQ(all.front().config.relation, "23");
    const auto single = run_simulation(all[4].config);
    EXPECT_EQ(single.counts, all[4].counts);
}

TEST(TallyEmitters, csv_and_json) {
    const auto t = run_simulation({"23", 1000, 0.25, 3});
    const std::string csv = tally_to_csv(t);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "11,12,13,21,22,23,31,32,33");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
    const auto j = tally_to_json(t);
    EXPECT_EQ(j["config"]["relation"], "23");
    EXPECT_EQ(j["config"]["seed"], 3);
    EXPECT_EQ(j["counts"]["11"], 1000);
}
