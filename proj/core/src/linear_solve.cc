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

#include "mermin/linear_solve.h"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace mermin {

LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const size_t rows = a.size();
    if (b.size() != rows) {
        throw std::invalid_argument("right-hand side length does not match the number of equations");
    }
    const size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto &row : a) {
        if (row.size() != cols) {
            throw std::invalid_argument("ragged coefficient matrix");
        }
    }
    std::vector<int> origin(rows);
    std::iota(origin.begin(), origin.end(), 0);

    size_t pivot_row = 0;
    std::vector<size_t> pivot_cols;
    for (size_t c = 0; c < cols && pivot_row < rows; ++c) {
        size_t p = pivot_row;
        while (p < rows && a[p][c] == Rational(0)) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[pivot_row]);
        std::swap(b[p], b[pivot_row]);
        std::swap(origin[p], origin[pivot_row]);

        const Rational inv = 1 / a[pivot_row][c];
        for (size_t k = c; k < cols; ++k) {
            a[pivot_row][k] *= inv;
        }
        b[pivot_row] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a[r][c] == Rational(0)) {
                continue;
            }
            const Rational f = a[r][c];
            for (size_t k = c; k < cols; ++k) {
                a[r][k] -= f * a[pivot_row][k];
            }
            b[r] -= f * b[pivot_row];
        }
        pivot_cols.push_back(c);
        ++pivot_row;
    }

    LinearSolution out;
    out.rank = static_cast<int>(pivot_row);
    for (size_t r = pivot_row; r < rows; ++r) {
        if (b[r] != Rational(0)) {
            out.status = LinearSolution::Status::Inconsistent;
            out.conflicting_equation = origin[r];
            return out;
        }
    }
    if (pivot_row < cols) {
        out.status = LinearSolution::Status::Underdetermined;
        return out;
    }
    out.status = LinearSolution::Status::Unique;
    out.x.assign(cols, Rational(0));
    for (size_t r = 0; r < pivot_row; ++r) {
        out.x[pivot_cols[r]] = b[r];
    }
    return out;
}

}  // namespace mermin
