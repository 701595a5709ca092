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

#ifndef MERMIN_CORE_TYPES_H
#define MERMIN_CORE_TYPES_H

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mermin {

/// A detector dial position, 1, 2 or 3.
class Setting {
   public:
    /// Throws std::invalid_argument unless value is 1, 2 or 3.
    explicit Setting(int value);

    int value() const noexcept { return value_; }
    /// Magnet orientation in degrees: 1 -> 0, 2 -> 120, 3 -> -120.
    int degrees() const noexcept;
    std::string label() const { return std::string(1, static_cast<char>('0' + value_)); }

    friend auto operator<=>(const Setting &, const Setting &) = default;

   private:
    int value_;
};

inline constexpr int kNumSettings = 3;
inline constexpr int kNumPairs = 9;

/// Relative angle between two magnets, folded into [0, 180] degrees.
/// Kept as an integer so that 120 compares exactly.
struct Angle {
    int degrees = 0;

    double radians() const noexcept;
    friend auto operator<=>(const Angle &, const Angle &) = default;
};

/// Folds |a - b| mod 360 into [0, 180].
Angle normalize_relative(int a_degrees, int b_degrees) noexcept;

enum class Color : std::uint8_t { R, G };

constexpr Color mirror(Color c) noexcept { return c == Color::R ? Color::G : Color::R; }
constexpr char to_char(Color c) noexcept { return c == Color::R ? 'R' : 'G'; }
/// Accepts 'R' or 'G'; throws std::invalid_argument otherwise.
Color color_from_char(char c);

enum class CaseLabel : std::uint8_t { A, B };

constexpr char to_char(CaseLabel c) noexcept { return c == CaseLabel::A ? 'a' : 'b'; }

/// Ordered (Alice, Bob) setting pair. Index 1..9 follows 11,12,13,21,22,23,31,32,33.
class SettingPair {
   public:
    SettingPair(Setting alice, Setting bob) noexcept : alice_(alice), bob_(bob) {}

    /// Throws std::invalid_argument unless 1 <= index <= 9.
    static SettingPair from_index(int index);
    /// Parses the two-digit form "11".."33".
    static SettingPair from_label(std::string_view label);

    Setting alice() const noexcept { return alice_; }
    Setting bob() const noexcept { return bob_; }
    /// 1-based position in the canonical order.
    int index() const noexcept { return (alice_.value() - 1) * kNumSettings + bob_.value(); }
    /// 0-based position, convenient for array lookups.
    int slot() const noexcept { return index() - 1; }
    std::string label() const { return alice_.label() + bob_.label(); }
    SettingPair swapped() const noexcept { return SettingPair(bob_, alice_); }

    friend auto operator<=>(const SettingPair &, const SettingPair &) = default;

   private:
    Setting alice_;
    Setting bob_;
};

/// All nine pairs in canonical order.
const std::array<SettingPair, kNumPairs> &all_pairs() noexcept;

Angle settings_to_theta(Setting a, Setting b) noexcept;
inline Angle settings_to_theta(const SettingPair &p) noexcept { return settings_to_theta(p.alice(), p.bob()); }

CaseLabel classify(const SettingPair &pair) noexcept;

inline bool is_case_a(int slot) noexcept { return slot == 0 || slot == 4 || slot == 8; }

}  // namespace mermin

#endif
