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

#ifndef MERMIN_FACTS_REPORT_H
#define MERMIN_FACTS_REPORT_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mermin/core_types.h"

namespace mermin {

/// Joint outcome counts observed at one setting pair.
struct OutcomeCounts {
    std::uint64_t rr = 0;
    std::uint64_t rg = 0;
    std::uint64_t gr = 0;
    std::uint64_t gg = 0;

    std::uint64_t total() const noexcept { return rr + rg + gr + gg; }
    std::uint64_t same() const noexcept { return rr + gg; }
    void add(Color alice, Color bob) noexcept;

    OutcomeCounts &operator+=(const OutcomeCounts &other) noexcept;
    friend bool operator==(const OutcomeCounts &, const OutcomeCounts &) = default;
};

/// Per-pair outcome counts for a whole run. Mergeable, so chunks can be summed.
struct PairTally {
    std::array<OutcomeCounts, kNumPairs> pairs{};

    PairTally &operator+=(const PairTally &other) noexcept;
    std::uint64_t total() const noexcept;
};

/// Trials and same-colour trials over a group of pairs.
struct Aggregate {
    std::uint64_t trials = 0;
    std::uint64_t same = 0;

    /// nullopt when no trial fell in the group.
    std::optional<double> fraction() const noexcept;
};

/// Result of a device run (quantum or instruction-set).
///
/// Fractions are never stored; they are derived from the counts so the two can
/// not drift apart.
struct FactsReport {
    std::string model;   // "quantum", "instruction-sets", "superdeterministic"
    std::string policy;  // "uniform" or "fixed:<pair>"
    std::uint64_t seed = 0;
    std::string generator;
    std::uint64_t chunk_size = 0;
    std::uint64_t n_trials = 0;
    PairTally tally;

    std::optional<double> same_fraction(int slot) const noexcept;
    /// Share of all trials that landed on this pair.
    double pair_frequency(int slot) const noexcept;
    Aggregate case_a() const noexcept;
    Aggregate case_b() const noexcept;
};

nlohmann::json to_json(const FactsReport &report);
/// Columns: pair,n,rr,rg,gr,gg,same_fraction
std::string to_csv(const FactsReport &report);
std::string to_text(const FactsReport &report);

/// Fixed-precision rendering used by every text/CSV emitter; empty for nullopt.
std::string format_fraction(std::optional<double> value, int digits = 6);

}  // namespace mermin

#endif
