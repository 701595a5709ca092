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

#include "mermin/facts_report.h"

#include <sstream>

#include <fmt/format.h>

namespace mermin {

void OutcomeCounts::add(Color alice, Color bob) noexcept {
    if (alice == Color::R) {
        ++(bob == Color::R ? rr : rg);
    } else {
        ++(bob == Color::R ? gr : gg);
    }
}

OutcomeCounts &OutcomeCounts::operator+=(const OutcomeCounts &other) noexcept {
    rr += other.rr;
    rg += other.rg;
    gr += other.gr;
    gg += other.gg;
    return *this;
}

PairTally &PairTally::operator+=(const PairTally &other) noexcept {
    for (int i = 0; i < kNumPairs; ++i) {
        pairs[i] += other.pairs[i];
    }
    return *this;
}

std::uint64_t PairTally::total() const noexcept {
    std::uint64_t t = 0;
    for (const auto &p : pairs) {
        t += p.total();
    }
    return t;
}

std::optional<double> Aggregate::fraction() const noexcept {
    if (trials == 0) {
        return std::nullopt;
    }
    return static_cast<double>(same) / static_cast<double>(trials);
}

std::optional<double> FactsReport::same_fraction(int slot) const noexcept {
    const auto &c = tally.pairs[slot];
    if (c.total() == 0) {
        return std::nullopt;
    }
    return static_cast<double>(c.same()) / static_cast<double>(c.total());
}

double FactsReport::pair_frequency(int slot) const noexcept {
    if (n_trials == 0) {
        return 0.0;
    }
    return static_cast<double>(tally.pairs[slot].total()) / static_cast<double>(n_trials);
}

namespace {

Aggregate aggregate(const PairTally &tally, CaseLabel which) {
    Aggregate agg;
    for (const auto &pair : all_pairs()) {
        if (classify(pair) != which) {
            continue;
        }
        const auto &c = tally.pairs[pair.slot()];
        agg.trials += c.total();
        agg.same += c.same();
    }
    return agg;
}

}  // namespace

Aggregate FactsReport::case_a() const noexcept { return aggregate(tally, CaseLabel::A); }
Aggregate FactsReport::case_b() const noexcept { return aggregate(tally, CaseLabel::B); }

std::string format_fraction(std::optional<double> value, int digits) {
    if (!value) {
        return "";
    }
    return fmt::format("{:.{}f}", *value, digits);
}

nlohmann::json to_json(const FactsReport &report) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto &pair : all_pairs()) {
        const auto &c = report.tally.pairs[pair.slot()];
        auto frac = report.same_fraction(pair.slot());
        pairs.push_back({
            {"pair", pair.label()},
            {"case", std::string(1, to_char(classify(pair)))},
            {"n", c.total()},
            {"rr", c.rr},
            {"rg", c.rg},
            {"gr", c.gr},
            {"gg", c.gg},
            {"same_fraction", frac ? nlohmann::json(*frac) : nlohmann::json(nullptr)},
        });
    }
    auto agg = [](const Aggregate &a) {
        auto f = a.fraction();
        return nlohmann::json{
            {"trials", a.trials},
            {"same", a.same},
            {"same_fraction", f ? nlohmann::json(*f) : nlohmann::json(nullptr)},
        };
    };
    return {
        {"model", report.model},
        {"policy", report.policy},
        {"seed", report.seed},
        {"generator", report.generator},
        {"chunk_size", report.chunk_size},
        {"n_trials", report.n_trials},
        {"pairs", pairs},
        {"case_a", agg(report.case_a())},
        {"case_b", agg(report.case_b())},
    };
}

std::string to_csv(const FactsReport &report) {
    std::ostringstream out;
    out << "pair,n,rr,rg,gr,gg,same_fraction\n";
    for (const auto &pair : all_pairs()) {
        const auto &c = report.tally.pairs[pair.slot()];
        out << pair.label() << ',' << c.total() << ',' << c.rr << ',' << c.rg << ',' << c.gr << ',' << c.gg << ','
            << format_fraction(report.same_fraction(pair.slot())) << '\n';
    }
    return out.str();
}

std::string to_text(const FactsReport &report) {
    std::ostringstream out;
    out << "# model=" << report.model << " policy=" << report.policy << " seed=" << report.seed
        << " generator=" << report.generator << " chunk_size=" << report.chunk_size << '\n';
    out << "trials: " << report.n_trials << "\n\n";
    out << fmt::format("{:>4} {:>4} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}\n", "pair", "case", "n", "RR", "RG", "GR",
                       "GG", "same");
    for (const auto &pair : all_pairs()) {
        const auto &c = report.tally.pairs[pair.slot()];
        out << fmt::format("{:>4} {:>4} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}\n", pair.label(),
                           to_char(classify(pair)), c.total(), c.rr, c.rg, c.gr, c.gg,
                           format_fraction(report.same_fraction(pair.slot())));
    }
    auto a = report.case_a();
    auto b = report.case_b();
    out << '\n';
    out << "case (a) same fraction: " << format_fraction(a.fraction()) << " (" << a.same << "/" << a.trials << ")\n";
    out << "case (b) same fraction: " << format_fraction(b.fraction()) << " (" << b.same << "/" << b.trials << ")\n";
    return out.str();
}

}  // namespace mermin
