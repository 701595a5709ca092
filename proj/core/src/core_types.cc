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
#include <stdexcept>

namespace mermin {

Setting::Setting(int value) : value_(value) {
    if (value < 1 || value > kNumSettings) {
        throw std::invalid_argument("setting must be 1, 2 or 3, got " + std::to_string(value));
    }
}

int Setting::degrees() const noexcept {
    switch (value_) {
        case 1:
            return 0;
        case 2:
            return 120;
        default:
            return -120;
    }
}

double Angle::radians() const noexcept { return degrees * std::numbers::pi / 180.0; }

Angle normalize_relative(int a_degrees, int b_degrees) noexcept {
    int d = (a_degrees - b_degrees) % 360;
    if (d < 0) {
        d += 360;
    }
    return Angle{d > 180 ? 360 - d : d};
}

Color color_from_char(char c) {
    switch (c) {
        case 'R':
            return Color::R;
        case 'G':
            return Color::G;
        default:
            throw std::invalid_argument(std::string("color must be R or G, got '") + c + "'");
    }
}

SettingPair SettingPair::from_index(int index) {
    if (index < 1 || index > kNumPairs) {
        throw std::invalid_argument("setting pair index must be in 1..9, got " + std::to_string(index));
    }
    return SettingPair(Setting((index - 1) / kNumSettings + 1), Setting((index - 1) % kNumSettings + 1));
}

SettingPair SettingPair::from_label(std::string_view label) {
    if (label.size() != 2 || label[0] < '1' || label[0] > '3' || label[1] < '1' || label[1] > '3') {
        throw std::invalid_argument("setting pair must be two digits in 1..3, got '" + std::string(label) + "'");
    }
    return SettingPair(Setting(label[0] - '0'), Setting(label[1] - '0'));
}

const std::array<SettingPair, kNumPairs> &all_pairs() noexcept {
    static const std::array<SettingPair, kNumPairs> pairs = [] {
        return std::array<SettingPair, kNumPairs>{
            SettingPair::from_index(1), SettingPair::from_index(2), SettingPair::from_index(3),
            SettingPair::from_index(4), SettingPair::from_index(5), SettingPair::from_index(6),
            SettingPair::from_index(7), SettingPair::from_index(8), SettingPair::from_index(9),
        };
    }();
    return pairs;
}

Angle settings_to_theta(Setting a, Setting b) noexcept { return normalize_relative(a.degrees(), b.degrees()); }

CaseLabel classify(const SettingPair &pair) noexcept {
    return pair.alice() == pair.bob() ? CaseLabel::A : CaseLabel::B;
}

}  // namespace mermin
