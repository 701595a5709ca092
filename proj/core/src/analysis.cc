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

#include "mermin/analysis.h"

#include <fmt/format.h>

#include "mermin/linear_solve.h"

namespace mermin {

DistributionCounts DistributionCounts::from_counts(std::array<std::int64_t, kNumG9Columns> counts) {
    DistributionCounts d{counts[0], counts[1], counts[2], counts[3], 0};
    for (auto c : counts) {
        if (c < 0) {
            throw std::invalid_argument("distribution counts must be nonnegative");
        }
        d.n += c;
    }
    return d;
}

namespace {

std::uint64_t at(const std::array<std::uint64_t, kNumPairs> &counts, const char *label) {
    return counts[SettingPair::from_label(label).slot()];
}

}  // namespace

DistributionCounts recover_distribution(const std::array<std::uint64_t, kNumPairs> &counts, std::uint64_t n) {
    if (n == 0) {
        throw InconsistentTally("inconsistent tally: no vectors");
    }
    for (const char *label : {"11", "22", "33"}) {
        if (at(counts, label) != n) {
            throw InconsistentTally(fmt::format("inconsistent tally: case (a) pair {} has {} of {} matches", label,
                                                at(counts, label), n));
        }
    }
    for (const auto &[x, y] : {std::pair{"12", "21"}, std::pair{"13", "31"}, std::pair{"23", "32"}}) {
        if (at(counts, x) != at(counts, y)) {
            throw InconsistentTally(fmt::format("inconsistent tally: pairs {} and {} differ ({} vs {})", x, y,
                                                at(counts, x), at(counts, y)));
        }
    }
    const auto c12 = static_cast<std::int64_t>(at(counts, "12"));
    const auto c13 = static_cast<std::int64_t>(at(counts, "13"));
    const auto c23 = static_cast<std::int64_t>(at(counts, "23"));
    const auto total = static_cast<std::int64_t>(n);
    const std::int64_t twice_n1 = c12 + c13 + c23 - total;
    if (twice_n1 % 2 != 0) {
        throw InconsistentTally("inconsistent tally: N1 = " + to_string(Rational(twice_n1, 2)) + " is not an integer");
    }
    DistributionCounts d;
    d.n1 = twice_n1 / 2;
    d.n2 = c12 - d.n1;
    d.n3 = c13 - d.n1;
    d.n4 = c23 - d.n1;
    d.n = total;
    if (d.n1 < 0 || d.n2 < 0 || d.n3 < 0 || d.n4 < 0) {
        throw InconsistentTally(
            fmt::format("inconsistent tally: negative solution ({}, {}, {}, {})", d.n1, d.n2, d.n3, d.n4));
    }
    return d;
}

DistributionCounts recover_distribution(const TallyTable &t) { return recover_distribution(t.counts, t.n_vectors); }

std::array<std::uint64_t, kNumPairs> synthesize_tally(const DistributionCounts &d) {
    static const RealmMatrixR94 m = build_realm_matrix();
    const auto n = d.as_array();
    std::array<std::uint64_t, kNumPairs> out{};
    for (int c = 0; c < kNumG9Columns; ++c) {
        for (int slot = 0; slot < kNumPairs; ++slot) {
            if (m.columns[c].entries[slot] == -1) {
                out[slot] += static_cast<std::uint64_t>(n[c]);
            }
        }
    }
    return out;
}

SameDifferent same_different_ratio(const DistributionCounts &d) {
    const auto tally = synthesize_tally(d);
    SameDifferent out;
    for (const auto &pair : all_pairs()) {
        if (classify(pair) != CaseLabel::B) {
            continue;
        }
        const auto c = static_cast<std::int64_t>(tally[pair.slot()]);
        out.same += c - d.n1;
        out.different += d.n - c;
    }
    if (out.same > 0) {
        out.ratio = Rational(out.different, out.same);
    }
    return out;
}

CaseBDecomposition decompose_case_b_fraction(const DistributionCounts &d) {
    if (d.n < 1) {
        throw std::invalid_argument("decomposition needs at least one vector");
    }
    CaseBDecomposition out;
    out.base = Rational(1, 3);
    out.excess = Rational(2, 3) * Rational(d.n1, d.n);
    out.total = out.base + out.excess;
    return out;
}

HullQuery HullQuery::uniform_case_b(Rational f) {
    HullQuery q;
    for (const auto &pair : all_pairs()) {
        q.target[pair.slot()] = classify(pair) == CaseLabel::A ? Rational(1) : f;
    }
    return q;
}

HullQuery HullQuery::from_expectations(const std::array<Rational, kNumPairs> &expectations) {
    HullQuery q;
    for (int slot = 0; slot < kNumPairs; ++slot) {
        q.target[slot] = (1 - expectations[slot]) / 2;
    }
    return q;
}

HullQuery HullQuery::from_tally(const TallyTable &t) {
    HullQuery q;
    for (int slot = 0; slot < kNumPairs; ++slot) {
        q.target[slot] = Rational(static_cast<std::int64_t>(t.counts[slot]), static_cast<std::int64_t>(t.n_vectors));
    }
    return q;
}

std::array<std::array<Rational, kNumPairs>, kNumG9Columns> hull_vertices() {
    const RealmMatrixR94 m = build_realm_matrix();
    std::array<std::array<Rational, kNumPairs>, kNumG9Columns> v{};
    for (int c = 0; c < kNumG9Columns; ++c) {
        for (int slot = 0; slot < kNumPairs; ++slot) {
            v[c][slot] = m.columns[c].entries[slot] == -1 ? 1 : 0;
        }
    }
    return v;
}

HullVerdict hull_membership(const HullQuery &q) {
    for (const auto &pair : all_pairs()) {
        if (classify(pair) == CaseLabel::A && q.target[pair.slot()] != Rational(1)) {
            throw std::invalid_argument("case (a) component at pair " + pair.label() + " must be 1, got " +
                                        to_string(q.target[pair.slot()]));
        }
    }
    const auto vertices = hull_vertices();
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int slot = 0; slot < kNumPairs; ++slot) {
        std::vector<Rational> row;
        for (int c = 0; c < kNumG9Columns; ++c) {
            row.push_back(vertices[c][slot]);
        }
        a.push_back(std::move(row));
        b.push_back(q.target[slot]);
    }
    a.emplace_back(kNumG9Columns, Rational(1));
    b.emplace_back(1);

    const LinearSolution sol = solve_exact(a, b);
    HullVerdict v;
    if (sol.status == LinearSolution::Status::Inconsistent) {
        v.failure = HullVerdict::Failure::Inconsistent;
        v.violated_index = sol.conflicting_equation;
        v.certificate =
            sol.conflicting_equation < kNumPairs
                ? "no combination of G9 vectors matches pair " + all_pairs()[sol.conflicting_equation].label() +
                      " (target " + to_string(q.target[sol.conflicting_equation]) + ")"
                : "weights cannot sum to 1";
        return v;
    }
    if (sol.status != LinearSolution::Status::Unique) {
        throw std::logic_error("G9 fraction vectors are affinely dependent");
    }
    std::array<Rational, kNumG9Columns> w{};
    std::copy(sol.x.begin(), sol.x.end(), w.begin());
    v.weights = w;
    for (int c = 0; c < kNumG9Columns; ++c) {
        if (w[c] < Rational(0)) {
            v.failure = HullVerdict::Failure::NegativeWeight;
            v.violated_index = c;
            v.certificate = fmt::format("w{} = {} < 0", c + 1, to_string(w[c]));
            return v;
        }
    }
    v.feasible = true;
    return v;
}

std::string to_string(const HullVerdict &v) {
    if (!v.feasible) {
        return "infeasible, " + v.certificate;
    }
    std::string s = "feasible, w = (";
    for (int c = 0; c < kNumG9Columns; ++c) {
        s += (c ? ", " : "") + to_string((*v.weights)[c]);
    }
    return s + ")";
}

nlohmann::json to_json(const HullVerdict &v) {
    nlohmann::json j{{"feasible", v.feasible}};
    if (v.weights) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto &x : *v.weights) {
            w.push_back(to_string(x));
        }
        j["weights"] = w;
    }
    if (!v.feasible) {
        j["certificate"] = v.certificate;
    }
    return j;
}

nlohmann::json to_json(const DistributionCounts &d) {
    return {{"G9-1", d.n1}, {"G9-2", d.n2}, {"G9-3", d.n3}, {"G9-4", d.n4}, {"n", d.n}};
}

}  // namespace mermin
