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

#include "mermin/lad_monte_carlo.h"

#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace mermin {

void McConfig::validate() const {
    if (n_vectors == 0) {
        throw std::invalid_argument("n_vectors must be at least 1");
    }
    if (!(p_minus >= 0.0 && p_minus <= 1.0)) {
        throw std::invalid_argument(fmt::format("p_minus must lie in [0, 1], got {}", p_minus));
    }
}

namespace {

struct DrawCounts {
    std::array<std::uint64_t, kNumG9Columns> draws{};
    DrawCounts &operator+=(const DrawCounts &o) {
        for (int c = 0; c < kNumG9Columns; ++c) {
            draws[c] += o.draws[c];
        }
        return *this;
    }
};

}  // namespace

TallyTable run_simulation(const McConfig &cfg, const ExecutionOptions &opts) {
    cfg.validate();
    static const RealmMatrixR94 matrix = build_realm_matrix();
    static const std::vector<FunctionalRelation> relations = enumerate_functional_relations(matrix);
    const FunctionalRelation &relation = find_relation(relations, cfg.relation);

    const DrawCounts drawn = run_chunked<DrawCounts>(
        cfg.n_vectors, cfg.seed, opts, [&](Rng &rng, std::uint64_t, std::uint64_t count, DrawCounts &acc) {
            for (std::uint64_t i = 0; i < count; ++i) {
                const int a = rng.bernoulli(cfg.p_minus) ? -1 : +1;
                const int b = rng.bernoulli(cfg.p_minus) ? -1 : +1;
                ++acc.draws[relation_column(relation, a, b)];
            }
        });

    TallyTable t;
    t.n_vectors = cfg.n_vectors;
    t.config = cfg;
    t.chunk_size = opts.chunk_size;
    t.column_draws = drawn.draws;
    // Every vector contributes its -1 entries; summing per column is exact.
    for (int c = 0; c < kNumG9Columns; ++c) {
        for (int slot = 0; slot < kNumPairs; ++slot) {
            if (relation.columns[c][slot] == -1) {
                t.counts[slot] += drawn.draws[c];
            }
        }
    }
    return t;
}

Rational case_b_same_fraction_exact(const TallyTable &t) {
    std::int64_t same = 0;
    for (const auto &pair : all_pairs()) {
        if (classify(pair) == CaseLabel::B) {
            same += static_cast<std::int64_t>(t.counts[pair.slot()]);
        }
    }
    return Rational(same, 6 * static_cast<std::int64_t>(t.n_vectors));
}

double case_b_same_fraction(const TallyTable &t) {
    std::uint64_t same = 0;
    for (const auto &pair : all_pairs()) {
        if (classify(pair) == CaseLabel::B) {
            same += t.counts[pair.slot()];
        }
    }
    return static_cast<double>(same) / (6.0 * static_cast<double>(t.n_vectors));
}

std::array<Rational, kNumG9Columns> expected_column_probabilities(const FunctionalRelation &r, Rational p_minus) {
    std::array<Rational, kNumG9Columns> out{};
    for (int a : {-1, +1}) {
        for (int b : {-1, +1}) {
            const Rational pa = a == -1 ? p_minus : 1 - p_minus;
            const Rational pb = b == -1 ? p_minus : 1 - p_minus;
            out[relation_column(r, a, b)] += pa * pb;
        }
    }
    return out;
}

Rational expected_case_b_same_fraction(Rational p_minus) {
    const Rational all_minus = p_minus * p_minus;
    return all_minus + (1 - all_minus) * Rational(1, 3);
}

std::vector<TallyTable> run_all_relations(std::uint64_t n_vectors, double p_minus, std::uint64_t seed,
                                          const ExecutionOptions &opts) {
    const auto relations = enumerate_functional_relations(build_realm_matrix());
    std::vector<TallyTable> out;
    out.reserve(relations.size());
    for (const auto &r : relations) {
        McConfig cfg;
        cfg.relation = r.label();
        cfg.n_vectors = n_vectors;
        cfg.p_minus = p_minus;
        cfg.seed = derive_seed(seed, r.label());
        out.push_back(run_simulation(cfg, opts));
    }
    return out;
}

std::string tally_to_csv(const TallyTable &t) {
    std::ostringstream out;
    for (const auto &pair : all_pairs()) {
        out << (pair.slot() == 0 ? "" : ",") << pair.label();
    }
    out << '\n';
    for (int slot = 0; slot < kNumPairs; ++slot) {
        out << (slot == 0 ? "" : ",") << t.counts[slot];
    }
    out << '\n';
    return out.str();
}

nlohmann::json tally_to_json(const TallyTable &t) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto &pair : all_pairs()) {
        counts[pair.label()] = t.counts[pair.slot()];
    }
    nlohmann::json draws = nlohmann::json::object();
    for (int c = 0; c < kNumG9Columns; ++c) {
        draws[RealmMatrixR94::label(c)] = t.column_draws[c];
    }
    return {
        {"config",
         {{"relation", t.config.relation},
          {"n_vectors", t.config.n_vectors},
          {"p_minus", t.config.p_minus},
          {"seed", t.config.seed},
          {"generator", std::string(Rng::kName)},
          {"chunk_size", t.chunk_size}}},
        {"counts", counts},
        {"column_draws", draws},
        {"case_b_same_fraction", case_b_same_fraction(t)},
    };
}

std::string tally_to_text(const TallyTable &t) {
    std::ostringstream out;
    out << "# relation=" << t.config.relation << " n_vectors=" << t.n_vectors << " p_minus=" << t.config.p_minus
        << " seed=" << t.config.seed << " generator=" << Rng::kName << " chunk_size=" << t.chunk_size << '\n';
    out << "Total number of -1 results for " << t.config.relation << " -> ";
    for (int row = 1; row <= kNumPairs; ++row) {
        if (t.config.relation.find(static_cast<char>('0' + row)) == std::string::npos) {
            out << row;
        }
    }
    out << '\n';
    for (const auto &pair : all_pairs()) {
        out << fmt::format(" {:>9}", pair.label());
    }
    out << '\n';
    for (int slot = 0; slot < kNumPairs; ++slot) {
        out << fmt::format(" {:>9}", t.counts[slot]);
    }
    out << "\n\ncase (b) same fraction: " << fmt::format("{:.6f}", case_b_same_fraction(t)) << '\n';
    return out.str();
}

std::string tallies_to_csv(const std::vector<TallyTable> &tables) {
    std::ostringstream out;
    out << "relation,seed";
    for (const auto &pair : all_pairs()) {
        out << ',' << pair.label();
    }
    out << ",case_b_same_fraction\n";
    for (const auto &t : tables) {
        out << t.config.relation << ',' << t.config.seed;
        for (auto c : t.counts) {
            out << ',' << c;
        }
        out << ',' << fmt::format("{:.6f}", case_b_same_fraction(t)) << '\n';
    }
    return out.str();
}

}  // namespace mermin
