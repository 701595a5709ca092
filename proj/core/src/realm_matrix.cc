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

#include "mermin/realm_matrix.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace mermin {

G9Vector g9_vector(const InstructionSet &s) {
    G9Vector v;
    for (const auto &pair : all_pairs()) {
        v.entries[pair.slot()] = s.respond(pair.alice()) == s.respond(pair.bob()) ? -1 : +1;
    }
    v.provenance.push_back(s);
    return v;
}

int RealmMatrixR94::column_of(const InstructionSet &s) const {
    const G9Entries e = g9_vector(s).entries;
    for (int c = 0; c < kNumG9Columns; ++c) {
        if (columns[c].entries == e) {
            return c;
        }
    }
    throw std::logic_error("instruction set " + s.name() + " has no column");
}

namespace {

/// Orders columns as all -1 first, then by the first case (b) row holding -1.
std::pair<int, int> column_order_key(const G9Entries &e) {
    int plus = 0;
    int first_minus = kNumPairs + 1;
    for (int slot = 0; slot < kNumPairs; ++slot) {
        if (e[slot] == +1) {
            ++plus;
        } else if (!is_case_a(slot) && first_minus > kNumPairs) {
            first_minus = slot + 1;
        }
    }
    return {plus, first_minus};
}

}  // namespace

RealmMatrixR94 build_realm_matrix() {
    std::vector<G9Vector> unique;
    for (const auto &s : all_instruction_sets()) {
        G9Vector v = g9_vector(s);
        auto it = std::find(unique.begin(), unique.end(), v);
        if (it == unique.end()) {
            unique.push_back(std::move(v));
        } else {
            it->provenance.push_back(s);
        }
    }
    if (unique.size() != kNumG9Columns) {
        throw std::logic_error("expected 4 unique G9 vectors, found " + std::to_string(unique.size()));
    }
    for (const auto &v : unique) {
        if (v.provenance.size() != 2 || v.provenance[0].mirror() != v.provenance[1]) {
            throw std::logic_error("G9 column is not produced by exactly one mirror pair");
        }
    }
    std::sort(unique.begin(), unique.end(), [](const G9Vector &a, const G9Vector &b) {
        return column_order_key(a.entries) < column_order_key(b.entries);
    });
    RealmMatrixR94 m;
    std::copy(unique.begin(), unique.end(), m.columns.begin());
    return m;
}

std::string FunctionalRelation::label() const { return std::to_string(row_a) + std::to_string(row_b); }

std::string FunctionalRelation::setting_pair_label() const {
    return SettingPair::from_index(row_a).label() + "&" + SettingPair::from_index(row_b).label();
}

std::string FunctionalRelation::codomain_label() const {
    std::string s;
    for (int r : codomain_rows) {
        s += std::to_string(r);
    }
    return s;
}

namespace {

int domain_code(int a, int b) { return 2 * (a == +1) + (b == +1); }

}  // namespace

bool rows_form_relation(const RealmMatrixR94 &m, int row_a, int row_b) {
    std::set<int> codes;
    for (int c = 0; c < kNumG9Columns; ++c) {
        codes.insert(domain_code(m.value(row_a, c), m.value(row_b, c)));
    }
    return codes.size() == kNumG9Columns;
}

std::vector<FunctionalRelation> enumerate_functional_relations(const RealmMatrixR94 &m) {
    std::vector<FunctionalRelation> out;
    for (int a = 1; a <= kNumPairs; ++a) {
        for (int b = a + 1; b <= kNumPairs; ++b) {
            if (!rows_form_relation(m, a, b)) {
                continue;
            }
            FunctionalRelation r;
            r.row_a = a;
            r.row_b = b;
            for (int row = 1; row <= kNumPairs; ++row) {
                if (row != a && row != b) {
                    r.codomain_rows.push_back(row);
                }
            }
            for (int c = 0; c < kNumG9Columns; ++c) {
                r.lookup[domain_code(m.value(a, c), m.value(b, c))] = c;
                r.columns[c] = m.columns[c].entries;
            }
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FunctionalRelation &x, const FunctionalRelation &y) { return x.label() < y.label(); });
    return out;
}

std::vector<std::pair<int, int>> excluded_case_b_row_pairs(const RealmMatrixR94 &m) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= kNumPairs; ++a) {
        for (int b = a + 1; b <= kNumPairs; ++b) {
            if (!is_case_a(a - 1) && !is_case_a(b - 1) && !rows_form_relation(m, a, b)) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

const FunctionalRelation &find_relation(const std::vector<FunctionalRelation> &relations, std::string_view label) {
    for (const auto &r : relations) {
        if (r.label() == label) {
            return r;
        }
    }
    throw std::invalid_argument("unknown functional relation '" + std::string(label) + "'");
}

int relation_column(const FunctionalRelation &r, int a, int b) {
    if ((a != 1 && a != -1) || (b != 1 && b != -1)) {
        throw std::invalid_argument(fmt::format("domain values must be +/-1, got ({}, {})", a, b));
    }
    return r.lookup[domain_code(a, b)];
}

G9Vector apply_relation(const FunctionalRelation &r, int a, int b) {
    G9Vector v;
    v.entries = r.columns[relation_column(r, a, b)];
    return v;
}

namespace {

std::string sets_label(const G9Vector &v) {
    std::string s;
    for (const auto &set : v.provenance) {
        s += (s.empty() ? "" : " ") + set.name();
    }
    return s;
}

std::string signed_entry(int v) { return v < 0 ? "-1" : "+1"; }

}  // namespace

std::string realm_to_csv(const RealmMatrixR94 &m) {
    std::ostringstream out;
    out << "g9,instruction_sets";
    for (const auto &pair : all_pairs()) {
        out << ',' << pair.label();
    }
    out << '\n';
    for (int c = 0; c < kNumG9Columns; ++c) {
        out << RealmMatrixR94::label(c) << ',' << sets_label(m.columns[c]);
        for (int slot = 0; slot < kNumPairs; ++slot) {
            out << ',' << signed_entry(m.columns[c].entries[slot]);
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json realm_to_json(const RealmMatrixR94 &m) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto &pair : all_pairs()) {
        pairs.push_back(pair.label());
    }
    nlohmann::json rows = nlohmann::json::array();
    for (int c = 0; c < kNumG9Columns; ++c) {
        nlohmann::json sets = nlohmann::json::array();
        for (const auto &s : m.columns[c].provenance) {
            sets.push_back(s.name());
        }
        rows.push_back({{"label", RealmMatrixR94::label(c)},
                        {"instruction_sets", sets},
                        {"entries", std::vector<int>(m.columns[c].entries.begin(), m.columns[c].entries.end())}});
    }
    return {{"pairs", pairs}, {"vectors", rows}};
}

std::string realm_to_text(const RealmMatrixR94 &m) {
    std::ostringstream out;
    out << fmt::format("{:<10}", "sets");
    for (const auto &pair : all_pairs()) {
        out << fmt::format(" {:>3}", pair.label());
    }
    out << "  vector\n";
    for (int c = 0; c < kNumG9Columns; ++c) {
        out << fmt::format("{:<10}", sets_label(m.columns[c]));
        for (int slot = 0; slot < kNumPairs; ++slot) {
            out << fmt::format(" {:>3}", signed_entry(m.columns[c].entries[slot]));
        }
        out << "  " << RealmMatrixR94::label(c) << '\n';
    }
    return out.str();
}

namespace {

constexpr std::array<std::pair<int, int>, 4> kDomainInputs{{{-1, -1}, {-1, +1}, {+1, -1}, {+1, +1}}};

}  // namespace

std::string relations_to_csv(const std::vector<FunctionalRelation> &relations) {
    std::ostringstream out;
    out << "relation,setting_pairs,codomain,mm,mp,pm,pp\n";
    for (const auto &r : relations) {
        out << r.label() << ',' << r.setting_pair_label() << ',' << r.codomain_label();
        for (const auto &[a, b] : kDomainInputs) {
            out << ',' << RealmMatrixR94::label(relation_column(r, a, b));
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json relations_to_json(const std::vector<FunctionalRelation> &relations) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &r : relations) {
        nlohmann::json lookup = nlohmann::json::object();
        for (const auto &[a, b] : kDomainInputs) {
            lookup[signed_entry(a) + "," + signed_entry(b)] = RealmMatrixR94::label(relation_column(r, a, b));
        }
        out.push_back({{"relation", r.label()},
                       {"setting_pairs", r.setting_pair_label()},
                       {"domain_rows", {r.row_a, r.row_b}},
                       {"codomain_rows", r.codomain_rows},
                       {"lookup", lookup}});
    }
    return out;
}

std::string relations_to_text(const std::vector<FunctionalRelation> &relations) {
    std::ostringstream out;
    out << fmt::format("{:<8} {:<8} {:<10} {:>6} {:>6} {:>6} {:>6}\n", "relation", "pairs", "codomain", "(-,-)",
                       "(-,+)", "(+,-)", "(+,+)");
    for (const auto &r : relations) {
        out << fmt::format("{:<8} {:<8} {:<10}", r.label(), r.setting_pair_label(), r.codomain_label());
        for (const auto &[a, b] : kDomainInputs) {
            out << fmt::format(" {:>6}", RealmMatrixR94::label(relation_column(r, a, b)));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace mermin
