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

#include "mermin/report.h"

#include <sstream>

#include <fmt/format.h>

#include "mermin/quantum_model.h"

namespace mermin {

FullReport full_report(std::uint64_t seed, std::uint64_t n_vectors, const ExecutionOptions &opts) {
    if (n_vectors == 0) {
        throw std::invalid_argument("n_vectors must be at least 1");
    }
    FullReport r;
    r.seed = seed;
    r.n_vectors = n_vectors;
    r.n_trials = 9 * n_vectors;

    r.quantum = run_quantum_experiment(r.n_trials, SelectionPolicy::uniform(), derive_seed(seed, "quantum"), opts);

    for (const auto &s : all_instruction_sets()) {
        r.set_agreement.emplace_back(s, case_b_agreement_fraction(s));
    }
    r.one_one_two = SetDistribution::parse("GGR:1,GRG:1,GRR:2");
    r.one_one_two_fractions = mixture_per_pair_fractions(r.one_one_two);
    r.one_one_two_case_b = mixture_case_b_fraction(r.one_one_two);
    r.one_one_two_simulated =
        simulate_instruction_sets(r.one_one_two, r.n_trials, derive_seed(seed, "instruction-sets"), opts);

    r.superdet = build_superdet_scenario();
    r.superdet_simulated = simulate_superdet(r.superdet, r.n_trials, derive_seed(seed, "superdeterministic"), opts);

    r.realm = build_realm_matrix();
    r.relations = enumerate_functional_relations(r.realm);
    r.excluded_pairs = excluded_case_b_row_pairs(r.realm);

    for (auto &tally : run_all_relations(n_vectors, 0.25, derive_seed(seed, "monte-carlo"), opts)) {
        RelationResult rr;
        rr.recovered = recover_distribution(tally);
        rr.same_different = same_different_ratio(rr.recovered);
        rr.decomposition = decompose_case_b_fraction(rr.recovered);
        rr.hull = hull_membership(HullQuery::from_tally(tally));
        rr.tally = std::move(tally);
        r.monte_carlo.push_back(std::move(rr));
    }
    r.expected_case_b = expected_case_b_same_fraction(Rational(1, 4));

    r.published_relation23 = recover_distribution(lad_published::kRelation23Tally, lad_published::kVectors);
    r.published_relation23_ratio = same_different_ratio(r.published_relation23);

    r.hull_quantum = hull_membership(HullQuery::uniform_case_b(Rational(1, 4)));
    r.hull_lad = hull_membership(HullQuery::uniform_case_b(Rational(3, 8)));
    return r;
}

std::string fractions_to_csv(const std::array<Rational, kNumPairs> &fractions) {
    std::ostringstream out;
    for (const auto &pair : all_pairs()) {
        out << (pair.slot() ? "," : "") << pair.label();
    }
    out << '\n';
    for (int slot = 0; slot < kNumPairs; ++slot) {
        out << (slot ? "," : "") << fmt::format("{:.2f}", to_double(fractions[slot]));
    }
    out << '\n';
    return out.str();
}

std::string fractions_to_text(const std::array<Rational, kNumPairs> &fractions) {
    std::ostringstream out;
    for (const auto &pair : all_pairs()) {
        out << fmt::format(" {:>5}", pair.label());
    }
    out << '\n';
    for (int slot = 0; slot < kNumPairs; ++slot) {
        out << fmt::format(" {:>5.2f}", to_double(fractions[slot]));
    }
    out << '\n';
    return out.str();
}

std::string superdet_to_text(const SuperdetScenario &sc) {
    std::ostringstream out;
    out << fmt::format("{:<5} {:>6}", "set", "p(set)");
    for (const auto &pair : all_pairs()) {
        if (classify(pair) == CaseLabel::B) {
            out << fmt::format(" {:>5}", pair.label());
        }
    }
    out << fmt::format(" {:>6}\n", "same");
    for (size_t i = 0; i < sc.sets.size(); ++i) {
        out << fmt::format("{:<5} {:>6}", sc.sets[i].name(), to_string(sc.production[i]));
        for (const auto &pair : all_pairs()) {
            if (classify(pair) == CaseLabel::B) {
                out << fmt::format(" {:>5}", to_string(sc.case_b_weighting[i][pair.slot()]));
            }
        }
        out << fmt::format(" {:>6}\n", to_string(sc.case_b_same_fraction(i)));
    }
    const auto marginal = sc.aggregate_pair_marginal();
    out << "\npooled pair frequency:";
    for (const auto &pair : all_pairs()) {
        out << ' ' << pair.label() << '=' << to_string(marginal[pair.slot()]);
    }
    out << '\n';
    return out.str();
}

std::string superdet_to_csv(const SuperdetScenario &sc) {
    std::ostringstream out;
    out << "set,production";
    for (const auto &pair : all_pairs()) {
        if (classify(pair) == CaseLabel::B) {
            out << ',' << pair.label();
        }
    }
    out << ",case_b_same_fraction\n";
    for (size_t i = 0; i < sc.sets.size(); ++i) {
        out << sc.sets[i].name() << ',' << to_string(sc.production[i]);
        for (const auto &pair : all_pairs()) {
            if (classify(pair) == CaseLabel::B) {
                out << ',' << to_string(sc.case_b_weighting[i][pair.slot()]);
            }
        }
        out << ',' << to_string(sc.case_b_same_fraction(i)) << '\n';
    }
    return out.str();
}

nlohmann::json superdet_to_json(const SuperdetScenario &sc) {
    nlohmann::json sets = nlohmann::json::array();
    for (size_t i = 0; i < sc.sets.size(); ++i) {
        nlohmann::json w = nlohmann::json::object();
        for (const auto &pair : all_pairs()) {
            if (classify(pair) == CaseLabel::B) {
                w[pair.label()] = to_string(sc.case_b_weighting[i][pair.slot()]);
            }
        }
        sets.push_back({{"set", sc.sets[i].name()},
                        {"production", to_string(sc.production[i])},
                        {"case_b_weighting", w},
                        {"case_b_same_fraction", to_string(sc.case_b_same_fraction(i))}});
    }
    nlohmann::json marginal = nlohmann::json::object();
    const auto m = sc.aggregate_pair_marginal();
    for (const auto &pair : all_pairs()) {
        marginal[pair.label()] = to_string(m[pair.slot()]);
    }
    return {{"sets", sets}, {"pooled_pair_frequency", marginal}};
}

namespace {

nlohmann::json rationals_json(const std::array<Rational, kNumPairs> &values) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &pair : all_pairs()) {
        j[pair.label()] = to_string(values[pair.slot()]);
    }
    return j;
}

nlohmann::json same_different_json(const SameDifferent &sd) {
    return {{"same", sd.same},
            {"different", sd.different},
            {"ratio", sd.ratio ? nlohmann::json(to_string(*sd.ratio)) : nlohmann::json(nullptr)}};
}

}  // namespace

nlohmann::json to_json(const FullReport &r) {
    nlohmann::json j;
    j["seed"] = r.seed;
    j["generator"] = std::string(Rng::kName);
    j["n_vectors"] = r.n_vectors;
    j["n_trials"] = r.n_trials;

    nlohmann::json probs = nlohmann::json::object();
    for (int theta : {0, 120}) {
        nlohmann::json row = nlohmann::json::object();
        for (const auto &o : kAllOutcomes) {
            row[std::string{to_char(o.alice), to_char(o.bob)}] = to_string(joint_probability_exact(o, Angle{theta}));
        }
        probs[std::to_string(theta)] = row;
    }
    j["quantum"] = {{"exact_joint_probabilities", probs}, {"simulated", to_json(r.quantum)}};

    nlohmann::json agreement = nlohmann::json::object();
    for (const auto &[s, f] : r.set_agreement) {
        agreement[s.name()] = to_string(f);
    }
    j["instruction_sets"] = {
        {"case_b_agreement", agreement},
        {"mixture_1_1_2",
         {{"distribution", r.one_one_two.to_json()},
          {"exact_fractions", rationals_json(r.one_one_two_fractions)},
          {"case_b_fraction", to_string(r.one_one_two_case_b)},
          {"simulated", to_json(r.one_one_two_simulated)}}},
    };
    j["superdeterministic"] = {{"scenario", superdet_to_json(r.superdet)},
                               {"simulated", to_json(r.superdet_simulated)}};

    nlohmann::json excluded = nlohmann::json::array();
    for (const auto &[a, b] : r.excluded_pairs) {
        excluded.push_back(std::to_string(a) + std::to_string(b));
    }
    j["realm_matrix"] = realm_to_json(r.realm);
    j["functional_relations"] = {{"relations", relations_to_json(r.relations)}, {"excluded_row_pairs", excluded}};

    nlohmann::json runs = nlohmann::json::array();
    for (const auto &rr : r.monte_carlo) {
        runs.push_back({{"tally", tally_to_json(rr.tally)},
                        {"recovered", to_json(rr.recovered)},
                        {"same_different", same_different_json(rr.same_different)},
                        {"decomposition",
                         {{"base", to_string(rr.decomposition.base)},
                          {"excess", to_string(rr.decomposition.excess)},
                          {"total", to_string(rr.decomposition.total)}}},
                        {"hull", to_json(rr.hull)}});
    }
    j["monte_carlo"] = {{"p_minus", 0.25},
                        {"expected_case_b_fraction", to_string(r.expected_case_b)},
                        {"runs", runs},
                        {"published_relation23",
                         {{"recovered", to_json(r.published_relation23)},
                          {"same_different", same_different_json(r.published_relation23_ratio)}}}};
    j["hull"] = {{"uniform_1_4", to_json(r.hull_quantum)}, {"uniform_3_8", to_json(r.hull_lad)}};
    return j;
}

std::string to_markdown(const FullReport &r) {
    std::ostringstream out;
    out << "# Mermin device: quantum statistics vs. instruction sets\n\n";
    out << "seed " << r.seed << ", generator " << Rng::kName << ", " << r.n_vectors << " G9 vectors per relation, "
        << r.n_trials << " device trials per run\n\n";

    out << "## Quantum joint probabilities (exact)\n\n";
    out << "| theta | RR | RG | GR | GG |\n|---|---|---|---|---|\n";
    for (int theta : {0, 120}) {
        out << "| " << theta;
        for (const auto &o : kAllOutcomes) {
            out << " | " << to_string(joint_probability_exact(o, Angle{theta}));
        }
        out << " |\n";
    }
    out << "\n## Quantum device run (Facts 1 and 2)\n\n```\n" << to_text(r.quantum) << "```\n\n";

    out << "## Instruction sets: case (b) agreement\n\n| set | agreement |\n|---|---|\n";
    for (const auto &[s, f] : r.set_agreement) {
        out << "| " << s.name() << " | " << to_string(f) << " |\n";
    }
    out << "\nEvery set agrees on at least 1/3 of case (b) pairs, so every mixture does too.\n\n";

    out << "## 1:1:2 mixture of G9-2:G9-3:G9-4 (fraction of -1 results)\n\n```\n"
        << fractions_to_text(r.one_one_two_fractions) << "```\n\ncase (b) total: " << to_string(r.one_one_two_case_b)
        << "\n\nSimulated with statistical independence:\n\n```\n"
        << to_text(r.one_one_two_simulated) << "```\n\n";

    out << "## Set-dependent setting choices (superdeterminism)\n\n```\n"
        << superdet_to_text(r.superdet) << "```\n\n```\n"
        << to_text(r.superdet_simulated) << "```\n\n";

    out << "## Instruction sets and their G9 vectors\n\n```\n" << realm_to_text(r.realm) << "```\n\n";
    out << "## Functional relations\n\n```\n" << relations_to_text(r.relations) << "```\n\nexcluded case (b) row pairs:";
    for (const auto &[a, b] : r.excluded_pairs) {
        out << ' ' << a << b << " (" << SettingPair::from_index(a).label() << " with "
            << SettingPair::from_index(b).label() << ')';
    }
    out << "\n\n";

    if (!r.monte_carlo.empty()) {
        out << "## Monte Carlo tally, relation " << r.monte_carlo.front().tally.config.relation << "\n\n```\n"
            << tally_to_text(r.monte_carlo.front().tally) << "```\n\n";
    }

    out << "## Recovered G9 distributions, all relations\n\n| vector |";
    for (const auto &rr : r.monte_carlo) {
        out << ' ' << rr.tally.config.relation << " |";
    }
    out << "\n|---|";
    for (size_t i = 0; i < r.monte_carlo.size(); ++i) {
        out << "---|";
    }
    out << '\n';
    for (int c = 0; c < kNumG9Columns; ++c) {
        out << "| " << RealmMatrixR94::label(c) << " |";
        for (const auto &rr : r.monte_carlo) {
            out << ' ' << rr.recovered.as_array()[c] << " |";
        }
        out << '\n';
    }
    out << "\n| relation | case (b) same | 1/3 + excess | Same | Different | Different/Same | hull |\n"
           "|---|---|---|---|---|---|---|\n";
    for (const auto &rr : r.monte_carlo) {
        out << fmt::format("| {} | {:.6f} | 1/3 + {:.6f} | {} | {} | {} | {} |\n", rr.tally.config.relation,
                           case_b_same_fraction(rr.tally), to_double(rr.decomposition.excess), rr.same_different.same,
                           rr.same_different.different,
                           rr.same_different.ratio ? to_string(*rr.same_different.ratio) : "undefined",
                           rr.hull.feasible ? "inside" : "outside");
    }
    out << "\nexpected case (b) same fraction at p_minus = 1/4: " << to_string(r.expected_case_b) << "\n\n";

    const auto &pub = r.published_relation23;
    out << "## Published relation-23 tally\n\nrecovered (N1, N2, N3, N4) = (" << pub.n1 << ", " << pub.n2 << ", "
        << pub.n3 << ", " << pub.n4 << "), Same = " << r.published_relation23_ratio.same
        << ", Different = " << r.published_relation23_ratio.different << ", Different/Same = "
        << (r.published_relation23_ratio.ratio ? to_string(*r.published_relation23_ratio.ratio) : "undefined")
        << "\n\n";

    out << "## Convex hull of the G9 vectors\n\n";
    out << "- uniform case (b) fraction 1/4 (quantum): " << to_string(r.hull_quantum) << '\n';
    out << "- uniform case (b) fraction 3/8 (Monte Carlo): " << to_string(r.hull_lad) << '\n';
    return out.str();
}

std::vector<std::pair<std::string, std::string>> to_csv_tables(const FullReport &r) {
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back("quantum_facts.csv", to_csv(r.quantum));
    {
        std::ostringstream out;
        out << "set,case_b_agreement\n";
        for (const auto &[s, f] : r.set_agreement) {
            out << s.name() << ',' << to_string(f) << '\n';
        }
        files.emplace_back("instruction_set_agreement.csv", out.str());
    }
    files.emplace_back("mixture_1_1_2.csv", fractions_to_csv(r.one_one_two_fractions));
    files.emplace_back("mixture_1_1_2_simulated.csv", to_csv(r.one_one_two_simulated));
    files.emplace_back("superdet_scenario.csv", superdet_to_csv(r.superdet));
    files.emplace_back("superdet_simulated.csv", to_csv(r.superdet_simulated));
    files.emplace_back("g9_vectors.csv", realm_to_csv(r.realm));
    files.emplace_back("functional_relations.csv", relations_to_csv(r.relations));
    if (!r.monte_carlo.empty()) {
        files.emplace_back("tally_" + r.monte_carlo.front().tally.config.relation + ".csv",
                           tally_to_csv(r.monte_carlo.front().tally));
    }
    {
        std::vector<TallyTable> tallies;
        for (const auto &rr : r.monte_carlo) {
            tallies.push_back(rr.tally);
        }
        files.emplace_back("tallies_all.csv", tallies_to_csv(tallies));
    }
    {
        std::ostringstream out;
        out << "vector";
        for (const auto &rr : r.monte_carlo) {
            out << ',' << rr.tally.config.relation;
        }
        out << '\n';
        for (int c = 0; c < kNumG9Columns; ++c) {
            out << RealmMatrixR94::label(c);
            for (const auto &rr : r.monte_carlo) {
                out << ',' << rr.recovered.as_array()[c];
            }
            out << '\n';
        }
        files.emplace_back("g9_distribution.csv", out.str());
    }
    {
        std::ostringstream out;
        out << "relation,same,different,ratio,base,excess,total,hull\n";
        for (const auto &rr : r.monte_carlo) {
            out << rr.tally.config.relation << ',' << rr.same_different.same << ',' << rr.same_different.different
                << ',' << (rr.same_different.ratio ? to_string(*rr.same_different.ratio) : "") << ','
                << to_string(rr.decomposition.base) << ',' << to_string(rr.decomposition.excess) << ','
                << to_string(rr.decomposition.total) << ',' << (rr.hull.feasible ? "inside" : "outside") << '\n';
        }
        files.emplace_back("identities.csv", out.str());
    }
    {
        std::ostringstream out;
        out << "target,feasible,w1,w2,w3,w4,certificate\n";
        for (const auto &[name, v] : {std::pair{"uniform_1_4", &r.hull_quantum}, std::pair{"uniform_3_8", &r.hull_lad}}) {
            out << name << ',' << (v->feasible ? "true" : "false");
            for (int c = 0; c < kNumG9Columns; ++c) {
                out << ',' << (v->weights ? to_string((*v->weights)[c]) : "");
            }
            out << ',' << v->certificate << '\n';
        }
        files.emplace_back("hull.csv", out.str());
    }
    return files;
}

}  // namespace mermin
