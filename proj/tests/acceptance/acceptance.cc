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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mermin/analysis.h"
#include "mermin/lad_monte_carlo.h"
#include "mermin/local_realism.h"
#include "mermin/quantum_model.h"
#include "mermin/realm_matrix.h"

using namespace mermin;

namespace {

constexpr std::uint64_t kSeed = 20261015;

constexpr double kFact2Tolerance = 0.001;
constexpr std::int64_t kBand25 = 1300;
constexpr std::int64_t kBand625 = 1500;
constexpr double kThreeEighthsTolerance = 0.002;
constexpr double kSuperdetTolerance = 0.002;
constexpr int kRandomMixtures = 1000;
constexpr int kRandomDistributions = 1000;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char *title, const std::function<Outcome()> &check) {
    Outcome o;
    try {
        o = check();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  [%2d] %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
}

std::string fmt_double(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

Outcome exact_qm_facts() {
    const JointOutcome rr{Color::R, Color::R};
    const JointOutcome gg{Color::G, Color::G};
    const bool ok = joint_probability_exact(rr, Angle{0}) == Rational(1, 2) &&
                    joint_probability_exact(gg, Angle{0}) == Rational(1, 2) &&
                    joint_probability_exact(rr, Angle{120}) == Rational(1, 8) &&
                    joint_probability_exact(gg, Angle{120}) == Rational(1, 8);
    return {ok, "P(RR|0)=" + to_string(joint_probability_exact(rr, Angle{0})) +
                    " P(RR|120)=" + to_string(joint_probability_exact(rr, Angle{120}))};
}

Outcome sampled_facts() {
    const auto r = run_quantum_experiment(9'000'000, SelectionPolicy::uniform(), derive_seed(kSeed, "quantum"));
    const auto a = r.case_a();
    const auto b = r.case_b();
    const bool ok = a.same == a.trials && std::abs(*b.fraction() - 0.25) <= kFact2Tolerance;
    return {ok, "case (a) " + fmt_double(*a.fraction()) + ", case (b) " + fmt_double(*b.fraction()) +
                    " (tolerance +/-" + fmt_double(kFact2Tolerance, 3) + ")"};
}

Outcome bell_bound() {
    bool ok = true;
    for (const auto &s : all_instruction_sets()) {
        const Rational f = case_b_agreement_fraction(s);
        ok &= f == Rational(1, 3) || f == Rational(1);
    }
    std::mt19937_64 gen(derive_seed(kSeed, "mixtures"));
    std::uniform_int_distribution<int> w(0, 1000);
    Rational min_seen(1);
    int sampled = 0;
    while (sampled < kRandomMixtures) {
        SetDistribution d;
        for (const auto &s : all_instruction_sets()) {
            d.add(s, Rational(w(gen), 1 + w(gen)));
        }
        if (d.empty()) {
            continue;
        }
        ++sampled;
        const Rational f = mixture_case_b_fraction(d.normalized());
        ok &= f >= Rational(1, 3);
        min_seen = std::min(min_seen, f);
    }
    return {ok, "8 sets in {1/3, 1}; min over " + std::to_string(kRandomMixtures) + " mixtures = " +
                    fmt_double(to_double(min_seen))};
}

Outcome one_one_two() {
    const auto d = SetDistribution::parse("GGR:1,RRG:1,GRG:1,RGR:1,GRR:2,RGG:2").normalized();
    const auto f = mixture_per_pair_fractions(d);
    const Rational one(1), q(1, 4), h(1, 2);
    const std::array<Rational, kNumPairs> expected{one, q, q, q, one, h, q, h, one};
    std::string detail;
    for (const auto &x : f) {
        detail += (detail.empty() ? "" : " ") + to_string(x);
    }
    return {f == expected, detail};
}

Outcome relation_23_bands() {
    const std::uint64_t n = 1'000'000;
    const auto t = run_simulation({"23", n, 0.25, derive_seed(kSeed, "table3")});
    auto within = [](std::uint64_t v, std::int64_t centre, std::int64_t band) {
        return std::llabs(static_cast<std::int64_t>(v) - centre) <= band;
    };
    bool ok = t.counts[0] == n && t.counts[4] == n && t.counts[8] == n;
    for (int slot : {1, 2, 3, 6}) {
        ok &= within(t.counts[slot], 250'000, kBand25);
    }
    for (int slot : {5, 7}) {
        ok &= within(t.counts[slot], 625'000, kBand625);
    }
    const auto &pub = lad_published::kRelation23Tally;
    bool sane = pub[0] == n && pub[4] == n && pub[8] == n;
    for (int slot : {1, 2, 3, 6}) {
        sane &= within(pub[slot], 250'000, kBand25);
    }
    for (int slot : {5, 7}) {
        sane &= within(pub[slot], 625'000, kBand625);
    }
    std::string detail = "counts";
    for (auto c : t.counts) {
        detail += " " + std::to_string(c);
    }
    detail += sane ? "; published counts inside bands" : "; published counts OUTSIDE bands";
    return {ok && sane, detail};
}

Outcome three_eighths() {
    const auto all = run_all_relations(1'000'000, 0.25, derive_seed(kSeed, "twelve"));
    bool ok = all.size() == 12 && expected_case_b_same_fraction(Rational(1, 4)) == Rational(3, 8);
    double lo = 1;
    double hi = 0;
    for (const auto &t : all) {
        const double f = case_b_same_fraction(t);
        ok &= std::abs(f - 0.375) <= kThreeEighthsTolerance;
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    }
    return {ok, "range [" + fmt_double(lo) + ", " + fmt_double(hi) + "], expectation " +
                    to_string(expected_case_b_same_fraction(Rational(1, 4)))};
}

std::vector<DistributionCounts> random_distributions(const char *label) {
    std::mt19937_64 gen(derive_seed(kSeed, label));
    std::uniform_int_distribution<std::int64_t> d(0, 1'000'000);
    std::vector<DistributionCounts> out;
    while (out.size() < static_cast<size_t>(kRandomDistributions)) {
        auto c = DistributionCounts::from_counts({d(gen), d(gen), d(gen), d(gen)});
        if (c.n > 0) {
            out.push_back(c);
        }
    }
    return out;
}

Outcome recovery() {
    const auto d = recover_distribution(lad_published::kRelation23Tally, lad_published::kVectors);
    bool ok = d.as_array() == std::array<std::int64_t, 4>{62874, 187317, 187458, 562351};
    int round_trips = 0;
    for (const auto &c : random_distributions("recovery")) {
        round_trips += recover_distribution(synthesize_tally(c), c.n) == c;
    }
    ok &= round_trips == kRandomDistributions;
    return {ok, "published -> (" + std::to_string(d.n1) + ", " + std::to_string(d.n2) + ", " + std::to_string(d.n3) +
                    ", " + std::to_string(d.n4) + "); " + std::to_string(round_trips) + "/" +
                    std::to_string(kRandomDistributions) + " round trips exact"};
}

Outcome different_same() {
    const auto pub = same_different_ratio(recover_distribution(lad_published::kRelation23Tally, lad_published::kVectors));
    bool ok = pub.same == 1'874'252 && pub.different == 3'748'504 && pub.ratio == Rational(2);
    int checked = 0;
    for (const auto &p : lad_published::kDistributions) {
        ok &= same_different_ratio(DistributionCounts::from_counts(p.counts)).ratio == Rational(2);
        ++checked;
    }
    for (const auto &t : run_all_relations(200'000, 0.25, derive_seed(kSeed, "ratio"))) {
        ok &= same_different_ratio(recover_distribution(t)).ratio == Rational(2);
        ++checked;
    }
    for (const auto &c : random_distributions("ratio")) {
        if (c.two_color() > 0) {
            ok &= same_different_ratio(c).ratio == Rational(2);
            ++checked;
        }
    }
    return {ok, "Same " + std::to_string(pub.same) + ", Different " + std::to_string(pub.different) + "; ratio 2 in " +
                    std::to_string(checked) + " distributions"};
}

Outcome decomposition() {
    bool ok = true;
    int checked = 0;
    auto check = [&](const DistributionCounts &c) {
        const auto dec = decompose_case_b_fraction(c);
        const auto tally = synthesize_tally(c);
        std::int64_t b = 0;
        for (int s = 0; s < kNumPairs; ++s) {
            b += is_case_a(s) ? 0 : static_cast<std::int64_t>(tally[s]);
        }
        ok &= dec.total == Rational(1, 3) + Rational(2, 3) * Rational(c.n1, c.n);
        ok &= dec.total == Rational(b, 6 * c.n);
        ++checked;
    };
    for (const auto &c : random_distributions("decomposition")) {
        check(c);
        check(DistributionCounts::from_counts({0, c.n2, c.n3, c.n4 + 1}));
    }
    for (const auto &p : lad_published::kDistributions) {
        check(DistributionCounts::from_counts(p.counts));
    }
    const auto zero = decompose_case_b_fraction(DistributionCounts::from_counts({0, 1, 1, 2}));
    ok &= zero.total == Rational(1, 3);
    return {ok, std::to_string(checked) + " distributions exact; N1 = 0 gives " + to_string(zero.total)};
}

Outcome hull() {
    const auto qm = hull_membership(HullQuery::uniform_case_b(Rational(1, 4)));
    const auto lad = hull_membership(HullQuery::uniform_case_b(Rational(3, 8)));
    const bool ok = !qm.feasible && qm.weights && (*qm.weights)[0] == Rational(-1, 8) && qm.violated_index == 0 &&
                    lad.feasible &&
                    *lad.weights == std::array<Rational, 4>{Rational(1, 16), Rational(5, 16), Rational(5, 16),
                                                            Rational(5, 16)};
    return {ok, "1/4: " + to_string(qm) + "; 3/8: " + to_string(lad)};
}

Outcome superdet() {
    const auto sc = build_superdet_scenario();
    bool exact = true;
    for (const auto &m : sc.aggregate_pair_marginal()) {
        exact &= m == Rational(1, 9);
    }
    const auto per_pair = sc.per_pair_same_fraction();
    for (int s = 0; s < kNumPairs; ++s) {
        exact &= per_pair[s] == (is_case_a(s) ? Rational(1) : Rational(1, 4));
    }
    const auto r = simulate_superdet(sc, 9'000'000, derive_seed(kSeed, "superdeterministic"));
    double worst_fraction = 0;
    double worst_frequency = 0;
    bool ok = exact;
    for (int s = 0; s < kNumPairs; ++s) {
        const double freq_err = std::abs(r.pair_frequency(s) - 1.0 / 9);
        worst_frequency = std::max(worst_frequency, freq_err);
        ok &= freq_err <= kSuperdetTolerance;
        if (!is_case_a(s)) {
            const double err = std::abs(*r.same_fraction(s) - 0.25);
            worst_fraction = std::max(worst_fraction, err);
            ok &= err <= kSuperdetTolerance;
        } else {
            ok &= *r.same_fraction(s) == 1.0;
        }
    }
    return {ok, std::string(exact ? "exact table ok" : "exact table WRONG") + "; max |f-1/4| " +
                    fmt_double(worst_fraction) + ", max |freq-1/9| " + fmt_double(worst_frequency)};
}

Outcome relations() {
    const auto m = build_realm_matrix();
    std::string labels;
    for (const auto &r : enumerate_functional_relations(m)) {
        labels += (labels.empty() ? "" : ",") + r.label();
    }
    const auto excluded = excluded_case_b_row_pairs(m);
    std::string ex;
    for (const auto &[a, b] : excluded) {
        ex += (ex.empty() ? "" : ",") + SettingPair::from_index(a).label() + "/" + SettingPair::from_index(b).label();
    }
    const bool ok = labels == "23,26,27,28,34,36,38,46,47,48,67,78" && ex == "12/21,13/31,23/32";
    return {ok, "relations " + labels + "; excluded " + ex};
}

}  // namespace

int main() {
    std::printf("acceptance suite, seed %llu\n", static_cast<unsigned long long>(kSeed));
    report(1, "exact quantum joint probabilities", exact_qm_facts);
    report(2, "sampled equal-setting and different-setting facts", sampled_facts);
    report(3, "Bell bound by enumeration and random mixtures", bell_bound);
    report(4, "1:1:2 mixture per-pair fractions", one_one_two);
    report(5, "relation 23 Monte Carlo bands", relation_23_bands);
    report(6, "twelve relations near 0.375", three_eighths);
    report(7, "exact recovery of N1..N4", recovery);
    report(8, "Different/Same = 2", different_same);
    report(9, "1/3 + (2/3) N1/n decomposition", decomposition);
    report(10, "convex hull verdicts", hull);
    report(11, "superdeterministic scenario", superdet);
    report(12, "functional relation enumeration", relations);
    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
