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

#ifndef MERMIN_LINEAR_SOLVE_H
#define MERMIN_LINEAR_SOLVE_H

#include <vector>

#include "mermin/rational.h"

namespace mermin {

/// Outcome of an exact solve of A x = b with A possibly non-square.
struct LinearSolution {
    enum class Status { Unique, Inconsistent, Underdetermined };

    Status status = Status::Inconsistent;
    std::vector<Rational> x;  // filled when Unique
    /// Original index of an equation that contradicts the others (Inconsistent only).
    int conflicting_equation = -1;
    int rank = 0;
};

/// Gauss-Jordan elimination over the rationals. Rows of `a` must all have the
/// same length; throws std::invalid_argument otherwise.
LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace mermin

#endif
