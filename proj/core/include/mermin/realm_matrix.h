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

#ifndef MERMIN_REALM_MATRIX_H
#define MERMIN_REALM_MATRIX_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mermin/core_types.h"
#include "mermin/local_realism.h"

namespace mermin {

/// A +/-1 response at each of the nine setting pairs; -1 marks matching colours.
using G9Entries = std::array<std::int8_t, kNumPairs>;

/// An instruction set's match/mismatch record at all nine setting pairs.
struct G9Vector {
    G9Entries entries{};
    /// Instruction sets that produce this vector.
    std::vector<InstructionSet> provenance;

    /// Entry at 1-based row (setting-pair index).
    int at_row(int row) const { return entries[row - 1]; }
    /// Vectors are equal when their entries are; provenance is informational.
    friend bool operator==(const G9Vector &a, const G9Vector &b) noexcept { return a.entries == b.entries; }
};

G9Vector g9_vector(const InstructionSet &s);

inline constexpr int kNumG9Columns = 4;

/// The four distinct G9 vectors as columns, rows in setting-pair order.
///
/// Column k (0-based) carries the label "G9-(k+1)": RRR/GGG, GGR/RRG,
/// GRG/RGR, GRR/RGG.
struct RealmMatrixR94 {
    std::array<G9Vector, kNumG9Columns> columns;

    int value(int row, int column) const { return columns[column].at_row(row); }
    /// Column index of the vector produced by s.
    int column_of(const InstructionSet &s) const;
    static std::string label(int column) { return "G9-" + std::to_string(column + 1); }
};

/// Collapses the eight instruction sets into the four unique columns.
/// Throws std::logic_error if the mirror-pair collapse does not hold.
RealmMatrixR94 build_realm_matrix();

/// A pair of case (b) rows whose four value pairs tell the four columns apart,
/// so the two rows determine the other seven.
struct FunctionalRelation {
    int row_a = 0;  // 1-based, row_a < row_b
    int row_b = 0;
    std::vector<int> codomain_rows;
    /// Column index for domain values encoded as 2*(a==+1) + (b==+1):
    /// (-1,-1), (-1,+1), (+1,-1), (+1,+1).
    std::array<int, 4> lookup{};
    /// Copies of the columns the lookup points into.
    std::array<G9Entries, kNumG9Columns> columns{};

    /// Row-index digraph, e.g. "23".
    std::string label() const;
    /// Same relation named by setting pairs, e.g. "12&13".
    std::string setting_pair_label() const;
    /// Digraph of the codomain rows, e.g. "1456789".
    std::string codomain_label() const;
};

/// True when the two rows of m give four distinct value pairs across the columns.
bool rows_form_relation(const RealmMatrixR94 &m, int row_a, int row_b);

/// All qualifying row pairs, ordered by label.
std::vector<FunctionalRelation> enumerate_functional_relations(const RealmMatrixR94 &m);

/// Case (b) row pairs that do not qualify.
std::vector<std::pair<int, int>> excluded_case_b_row_pairs(const RealmMatrixR94 &m);

/// Throws std::invalid_argument if the label names no relation.
const FunctionalRelation &find_relation(const std::vector<FunctionalRelation> &relations, std::string_view label);

/// Column index selected by the two domain values. Throws std::invalid_argument
/// unless both values are -1 or +1.
int relation_column(const FunctionalRelation &r, int a, int b);
G9Vector apply_relation(const FunctionalRelation &r, int a, int b);

std::string realm_to_csv(const RealmMatrixR94 &m);
nlohmann::json realm_to_json(const RealmMatrixR94 &m);
std::string realm_to_text(const RealmMatrixR94 &m);

std::string relations_to_csv(const std::vector<FunctionalRelation> &relations);
nlohmann::json relations_to_json(const std::vector<FunctionalRelation> &relations);
std::string relations_to_text(const std::vector<FunctionalRelation> &relations);

}  // namespace mermin

#endif
