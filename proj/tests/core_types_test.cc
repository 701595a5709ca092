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

#include "mermin/core_types.h"

#include <cmath>
#include <numbers>
#include <set>

#include "gtest/gtest.h"

using namespace mermin;

namespace {

// Angle between two coplanar unit vectors at the given orientations, in degrees,
// computed from their dot product.
int geometric_angle(int a_deg, int b_deg) {
    const double a = a_deg * std::numbers::pi / 180.0;
    const double b = b_deg * std::numbers::pi / 180.0;
    const double dot = std::cos(a) * std::cos(b) + std::sin(a) * std::sin(b);
    return static_cast<int>(std::lround(std::acos(std::clamp(dot, -1.0, 1.0)) * 180.0 / std::numbers::pi));
}

}  // namespace

TEST(Setting, rejects_out_of_range) {
    EXPECT_THROW(Setting(0), std::invalid_argument);
    EXPECT_THROW(Setting(4), std::invalid_argument);
    EXPECT_EQ(Setting(1).degrees(), 0);
    EXPECT_EQ(Setting(2).degrees(), 120);
    EXPECT_EQ(Setting(3).degrees(), -120);
}

TEST(SettingsToTheta, examples) {
    EXPECT_EQ(settings_to_theta(Setting(1), Setting(1)).degrees, 0);
    EXPECT_EQ(settings_to_theta(Setting(1), Setting(2)).degrees, 120);
    EXPECT_EQ(settings_to_theta(Setting(2), Setting(3)).degrees, 120);
}

TEST(SettingsToTheta, matches_geometry_and_is_symmetric) {
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            const Angle t = settings_to_theta(Setting(a), Setting(b));
            EXPECT_EQ(t.degrees, geometric_angle(Setting(a).degrees(), Setting(b).degrees()));
            EXPECT_EQ(t, settings_to_theta(Setting(b), Setting(a)));
            EXPECT_TRUE(t.degrees == 0 || t.degrees == 120);
        }
    }
}

TEST(NormalizeRelative, folds_into_half_turn) {
    EXPECT_EQ(normalize_relative(120, -120).degrees, 120);
    EXPECT_EQ(normalize_relative(-120, 120).degrees, 120);
    EXPECT_EQ(normalize_relative(0, 180).degrees, 180);
    EXPECT_EQ(normalize_relative(350, 10).degrees, 20);
    EXPECT_EQ(normalize_relative(720, 0).degrees, 0);
}

TEST(SettingPair, index_round_trip_and_order) {
    const char *order[] = {"11", "12", "13", "21", "22", "23", "31", "32", "33"};
    std::set<int> seen;
    for (int i = 1; i <= kNumPairs; ++i) {
        const SettingPair p = SettingPair::from_index(i);
        EXPECT_EQ(p.index(), i);
        EXPECT_EQ(p.label(), order[i - 1]);
        EXPECT_EQ(SettingPair::from_label(p.label()), p);
        EXPECT_EQ(all_pairs()[i - 1], p);
        seen.insert(p.index());
    }
    EXPECT_EQ(seen.size(), 9u);
    EXPECT_THROW(SettingPair::from_index(0), std::invalid_argument);
    EXPECT_THROW(SettingPair::from_index(10), std::invalid_argument);
    EXPECT_THROW(SettingPair::from_label("14"), std::invalid_argument);
    EXPECT_THROW(SettingPair::from_label("1"), std::invalid_argument);
}

TEST(Classify, partition) {
    EXPECT_EQ(classify(SettingPair::from_label("11")), CaseLabel::A);
    EXPECT_EQ(classify(SettingPair::from_label("23")), CaseLabel::B);
    EXPECT_EQ(classify(SettingPair::from_label("33")), CaseLabel::A);
    int a = 0;
    int b = 0;
    for (const auto &p : all_pairs()) {
        if (classify(p) == CaseLabel::A) {
            ++a;
            EXPECT_TRUE(p.index() == 1 || p.index() == 5 || p.index() == 9);
            EXPECT_TRUE(is_case_a(p.slot()));
        } else {
            ++b;
            EXPECT_FALSE(is_case_a(p.slot()));
        }
    }
    EXPECT_EQ(a, 3);
    EXPECT_EQ(b, 6);
}

TEST(Color, mirror_is_involution) {
    EXPECT_EQ(mirror(Color::R), Color::G);
    EXPECT_EQ(mirror(Color::G), Color::R);
    EXPECT_EQ(mirror(mirror(Color::R)), Color::R);
    EXPECT_EQ(color_from_char('R'), Color::R);
    EXPECT_THROW(color_from_char('B'), std::invalid_argument);
}
