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

#ifndef MERMIN_TESTS_TEST_UTIL_H
#define MERMIN_TESTS_TEST_UTIL_H

#include <cmath>
#include <cstdint>

namespace mermin::testing {

/// |k/n - p| <= z * sqrt(p(1-p)/n)
inline bool within_sigma(std::uint64_t k, std::uint64_t n, double p, double z) {
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(n));
    return std::abs(static_cast<double>(k) / static_cast<double>(n) - p) <= z * sigma;
}

}  // namespace mermin::testing

#endif
