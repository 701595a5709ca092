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

#include "mermin/local_realism.h"

#include <sstream>
#include <stdexcept>

#include "mermin/rng.h"

namespace mermin {

InstructionSet InstructionSet::parse(std::string_view text) {
    if (text.size() != 3) {
        throw std::invalid_argument("instruction set must be three of R/G, got '" + std::string(text) + "'");
    }
    try {
        return InstructionSet(color_from_char(text[0]), color_from_char(text[1]), color_from_char(text[2]));
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("instruction set must be three of R/G, got '" + std::string(text) + "'");
    }
}

InstructionSet InstructionSet::mirror() const noexcept {
    return InstructionSet(mermin::mirror(colors_[0]), mermin::mirror(colors_[1]), mermin::mirror(colors_[2]));
}

bool InstructionSet::is_two_color() const noexcept { return !(colors_[0] == colors_[1] && colors_[1] == colors_[2]); }

std::string InstructionSet::name() const { return {to_char(colors_[0]), to_char(colors_[1]), to_char(colors_[2])}; }

const std::array<InstructionSet, 8> &all_instruction_sets() noexcept {
    using enum Color;
    static const std::array<InstructionSet, 8> sets{
        InstructionSet(G, G, R), InstructionSet(R, R, G), InstructionSet(G, R, R), InstructionSet(R, G, G),
        InstructionSet(G, R, G), InstructionSet(R, G, R), InstructionSet(G, G, G), InstructionSet(R, R, R),
    };
    return sets;
}

Color respond(const InstructionSet &s, Setting setting) noexcept { return s.respond(setting); }

Rational case_b_agreement_fraction(const InstructionSet &s) {
    int same = 0;
    int total = 0;
    for (const auto &pair : all_pairs()) {
        if (classify(pair) != CaseLabel::B) {
            continue;
        }
        ++total;
        if (s.respond(pair.alice()) == s.respond(pair.bob())) {
            ++same;
        }
    }
    return Rational(same, total);
}

void SetDistribution::add(const InstructionSet &s, Rational weight) {
    if (weight < Rational(0)) {
        throw std::invalid_argument("negative weight " + mermin::to_string(weight) + " for " + s.name());
    }
    weights_[s] += weight;
}

Rational SetDistribution::weight(const InstructionSet &s) const {
    auto it = weights_.find(s);
    return it == weights_.end() ? Rational(0) : it->second;
}

Rational SetDistribution::total() const {
    Rational t;
    for (const auto &[set, w] : weights_) {
        t += w;
    }
    return t;
}

bool SetDistribution::total_is_zero() const { return total() == Rational(0); }

SetDistribution SetDistribution::normalized() const {
    const Rational t = total();
    if (t == Rational(0)) {
        throw std::invalid_argument("instruction-set distribution is empty");
    }
    SetDistribution out;
    for (const auto &[set, w] : weights_) {
        if (w != Rational(0)) {
            out.weights_[set] = w / t;
        }
    }
    return out;
}

bool SetDistribution::is_mirror_balanced() const {
    for (const auto &s : all_instruction_sets()) {
        if (weight(s) != weight(s.mirror())) {
            return false;
        }
    }
    return true;
}

SetDistribution SetDistribution::mirrored() const {
    SetDistribution out;
    for (const auto &[set, w] : weights_) {
        out.weights_[set.mirror()] = w;
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

SetDistribution SetDistribution::parse(std::string_view text) {
    SetDistribution d;
    while (!text.empty()) {
        const size_t comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        const size_t colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("distribution entry '" + std::string(item) + "' is not SET:weight");
        }
        d.add(InstructionSet::parse(trim(item.substr(0, colon))), parse_rational(trim(item.substr(colon + 1))));
    }
    if (d.weights_.empty()) {
        throw std::invalid_argument("instruction-set distribution is empty");
    }
    return d;
}

SetDistribution SetDistribution::from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("distribution JSON must be an object of SET: weight");
    }
    SetDistribution d;
    for (const auto &[key, value] : j.items()) {
        Rational w;
        if (value.is_number_integer()) {
            w = Rational(value.get<std::int64_t>());
        } else if (value.is_string()) {
            w = parse_rational(value.get<std::string>());
        } else if (value.is_number()) {
            w = parse_rational(value.dump());
        } else {
            throw std::invalid_argument("weight for " + key + " must be a number or rational string");
        }
        d.add(InstructionSet::parse(key), w);
    }
    return d;
}

nlohmann::json SetDistribution::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &s : all_instruction_sets()) {
        if (auto it = weights_.find(s); it != weights_.end()) {
            j[s.name()] = mermin::to_string(it->second);
        }
    }
    return j;
}

std::string SetDistribution::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto &s : all_instruction_sets()) {
        if (auto it = weights_.find(s); it != weights_.end()) {
            out << (first ? "" : ",") << s.name() << ':' << mermin::to_string(it->second);
            first = false;
        }
    }
    return out.str();
}

std::array<Rational, kNumPairs> mixture_per_pair_fractions(const SetDistribution &d) {
    const SetDistribution norm = d.normalized();
    std::array<Rational, kNumPairs> out{};
    for (const auto &[set, w] : norm.weights()) {
        for (const auto &pair : all_pairs()) {
            if (set.respond(pair.alice()) == set.respond(pair.bob())) {
                out[pair.slot()] += w;
            }
        }
    }
    return out;
}

Rational mixture_case_b_fraction(const SetDistribution &d) {
    const SetDistribution norm = d.normalized();
    Rational f;
    for (const auto &[set, w] : norm.weights()) {
        f += w * case_b_agreement_fraction(set);
    }
    return f;
}

namespace {

/// Inverse-CDF sampler over a finite list of rational weights.
class CategoricalSampler {
   public:
    explicit CategoricalSampler(const std::vector<Rational> &weights) {
        Rational total;
        for (const auto &w : weights) {
            total += w;
        }
        Rational running;
        for (size_t i = 0; i < weights.size(); ++i) {
            running += weights[i];
            if (weights[i] != Rational(0)) {
                last_nonzero_ = i;
            }
            cumulative_.push_back(to_double(running / total));
        }
    }

    size_t sample(Rng &rng) const {
        const double u = rng.uniform01();
        for (size_t i = 0; i < cumulative_.size(); ++i) {
            if (u < cumulative_[i]) {
                return i;
            }
        }
        return last_nonzero_;
    }

   private:
    std::vector<double> cumulative_;
    size_t last_nonzero_ = 0;
};

FactsReport make_report(std::string model, std::uint64_t n_trials, std::uint64_t seed,
                        const ExecutionOptions &opts) {
    if (n_trials == 0) {
        throw std::invalid_argument("n_trials must be at least 1");
    }
    FactsReport report;
    report.model = std::move(model);
    report.seed = seed;
    report.generator = std::string(Rng::kName);
    report.chunk_size = opts.chunk_size;
    report.n_trials = n_trials;
    return report;
}

}  // namespace

FactsReport simulate_instruction_sets(const SetDistribution &d, std::uint64_t n_trials, std::uint64_t seed,
                                      const ExecutionOptions &opts) {
    const SetDistribution norm = d.normalized();
    std::vector<InstructionSet> sets;
    std::vector<Rational> weights;
    for (const auto &[set, w] : norm.weights()) {
        sets.push_back(set);
        weights.push_back(w);
    }
    const CategoricalSampler sampler(weights);

    FactsReport report = make_report("instruction-sets", n_trials, seed, opts);
    report.policy = "uniform";
    report.tally = run_chunked<PairTally>(
        n_trials, seed, opts, [&](Rng &rng, std::uint64_t, std::uint64_t count, PairTally &acc) {
            for (std::uint64_t i = 0; i < count; ++i) {
                const InstructionSet &s = sets[sampler.sample(rng)];
                const SettingPair &pair = all_pairs()[rng.uniform_below(kNumPairs)];
                acc.pairs[pair.slot()].add(s.respond(pair.alice()), s.respond(pair.bob()));
            }
        });
    return report;
}

std::array<Rational, kNumPairs> SuperdetScenario::conditional_pair_distribution(size_t set_index) const {
    std::array<Rational, kNumPairs> out{};
    for (const auto &pair : all_pairs()) {
        const int slot = pair.slot();
        out[slot] = classify(pair) == CaseLabel::A ? Rational(1, kNumPairs)
                                                   : case_b_weighting[set_index][slot] * Rational(6, kNumPairs);
    }
    return out;
}

std::array<Rational, kNumPairs> SuperdetScenario::aggregate_pair_marginal() const {
    std::array<Rational, kNumPairs> out{};
    Rational total_production;
    for (const auto &p : production) {
        total_production += p;
    }
    for (size_t i = 0; i < sets.size(); ++i) {
        const auto cond = conditional_pair_distribution(i);
        for (int slot = 0; slot < kNumPairs; ++slot) {
            out[slot] += production[i] / total_production * cond[slot];
        }
    }
    return out;
}

Rational SuperdetScenario::case_b_same_fraction(size_t set_index) const {
    const InstructionSet &s = sets[set_index];
    Rational f;
    for (const auto &pair : all_pairs()) {
        if (classify(pair) == CaseLabel::B && s.respond(pair.alice()) == s.respond(pair.bob())) {
            f += case_b_weighting[set_index][pair.slot()];
        }
    }
    return f;
}

std::array<Rational, kNumPairs> SuperdetScenario::per_pair_same_fraction() const {
    Rational total_production;
    for (const auto &p : production) {
        total_production += p;
    }
    std::array<Rational, kNumPairs> same{};
    for (size_t i = 0; i < sets.size(); ++i) {
        const auto cond = conditional_pair_distribution(i);
        for (const auto &pair : all_pairs()) {
            if (sets[i].respond(pair.alice()) == sets[i].respond(pair.bob())) {
                same[pair.slot()] += production[i] / total_production * cond[pair.slot()];
            }
        }
    }
    const auto marginal = aggregate_pair_marginal();
    for (int slot = 0; slot < kNumPairs; ++slot) {
        same[slot] /= marginal[slot];
    }
    return same;
}

SuperdetScenario build_superdet_scenario() {
    SuperdetScenario sc;
    // Doubled case (b) pair (and its swap) for each set class.
    const std::pair<const char *, const char *> plan[] = {
        {"RRG", "23"}, {"GGR", "23"}, {"GRG", "12"}, {"RGR", "12"}, {"GRR", "13"}, {"RGG", "13"},
    };
    for (const auto &[name, doubled] : plan) {
        const SettingPair hot = SettingPair::from_label(doubled);
        std::array<Rational, kNumPairs> w{};
        for (const auto &pair : all_pairs()) {
            if (classify(pair) == CaseLabel::A) {
                continue;
            }
            w[pair.slot()] = (pair == hot || pair == hot.swapped()) ? Rational(2, 8) : Rational(1, 8);
        }
        sc.sets.push_back(InstructionSet::parse(name));
        sc.production.push_back(Rational(1, 6));
        sc.case_b_weighting.push_back(w);
    }
    return sc;
}

FactsReport simulate_superdet(const SuperdetScenario &scenario, std::uint64_t n_trials, std::uint64_t seed,
                              const ExecutionOptions &opts) {
    if (scenario.sets.empty() || scenario.sets.size() != scenario.production.size() ||
        scenario.sets.size() != scenario.case_b_weighting.size()) {
        throw std::invalid_argument("superdeterministic scenario is malformed");
    }
    const CategoricalSampler set_sampler(scenario.production);
    std::vector<CategoricalSampler> pair_samplers;
    for (size_t i = 0; i < scenario.sets.size(); ++i) {
        const auto cond = scenario.conditional_pair_distribution(i);
        pair_samplers.emplace_back(std::vector<Rational>(cond.begin(), cond.end()));
    }

    FactsReport report = make_report("superdeterministic", n_trials, seed, opts);
    report.policy = "set-dependent";
    report.tally = run_chunked<PairTally>(
        n_trials, seed, opts, [&](Rng &rng, std::uint64_t, std::uint64_t count, PairTally &acc) {
            for (std::uint64_t i = 0; i < count; ++i) {
                const size_t k = set_sampler.sample(rng);
                const InstructionSet &s = scenario.sets[k];
                const SettingPair &pair = all_pairs()[pair_samplers[k].sample(rng)];
                acc.pairs[pair.slot()].add(s.respond(pair.alice()), s.respond(pair.bob()));
            }
        });
    return report;
}

}  // namespace mermin
