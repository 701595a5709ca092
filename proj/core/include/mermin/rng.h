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

#ifndef MERMIN_RNG_H
#define MERMIN_RNG_H

#include <cstdint>
#include <random>
#include <string_view>

namespace mermin {

/// Seedable generator with a stable, implementation-independent stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Distributions are implemented here rather than taken from
/// <random> because the standard distributions differ between library
/// vendors; this keeps runs bit-identical across toolchains.
class Rng {
   public:
    static constexpr std::string_view kName = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Unbiased (rejection on the top bits).
    std::uint64_t uniform_below(std::uint64_t bound);

    bool bernoulli(double p) { return uniform01() < p; }

   private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to decorrelate derived seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for chunk `index` of a run seeded with `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Seed for a named sub-run (e.g. one functional relation) of a run seeded with `master`.
/// The label is hashed with 64-bit FNV-1a before mixing.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label) noexcept;

}  // namespace mermin

#endif
