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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "mermin/analysis.h"
#include "mermin/lad_monte_carlo.h"
#include "mermin/local_realism.h"
#include "mermin/quantum_model.h"
#include "mermin/realm_matrix.h"
#include "mermin/report.h"

namespace mermin::cli {
namespace {

struct Output {
    std::string format = "text";
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    std::uint64_t chunk_size = ExecutionOptions{}.chunk_size;

    ExecutionOptions exec() const { return {threads, chunk_size}; }
};

std::uint64_t resolve_seed(const Output &o) {
    if (o.seed) {
        return *o.seed;
    }
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

/// Writes one rendered table either to stdout or to <out_dir>/<stem>.<ext>.
class Emitter {
   public:
    Emitter(const Output &opts, std::ostream &out) : opts_(opts), out_(out) {}

    void emit(const std::string &stem, const std::function<std::string()> &text,
              const std::function<std::string()> &csv, const std::function<nlohmann::json()> &json) {
        std::string body;
        std::string ext;
        if (opts_.format == "csv") {
            body = csv();
            ext = "csv";
        } else if (opts_.format == "json") {
            body = json().dump(2) + "\n";
            ext = "json";
        } else {
            body = text();
            ext = "txt";
        }
        write(stem + "." + ext, body);
    }

    void write(const std::string &file_name, const std::string &body) {
        if (opts_.out_dir.empty()) {
            out_ << body;
            return;
        }
        std::filesystem::create_directories(opts_.out_dir);
        const auto path = std::filesystem::path(opts_.out_dir) / file_name;
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot write " + path.string());
        }
        f << body;
        out_ << "wrote " << path.string() << '\n';
    }

   private:
    const Output &opts_;
    std::ostream &out_;
};

std::string seed_comment(std::uint64_t seed) {
    return fmt::format("# seed={} generator={}\n", seed, Rng::kName);
}

template <typename T, size_t N>
std::array<T, N> parse_list(const std::string &text, const std::function<T(const std::string &)> &parse,
                            const char *what) {
    std::array<T, N> out{};
    std::stringstream ss(text);
    std::string item;
    size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i == N) {
            break;
        }
        out[i++] = parse(item);
    }
    if (i != N || std::getline(ss, item, ',')) {
        throw std::invalid_argument(fmt::format("{} needs exactly {} comma-separated values", what, N));
    }
    return out;
}

std::string exact_fractions_csv(const std::array<Rational, kNumPairs> &f) {
    std::ostringstream out;
    out << "pair,fraction,value\n";
    for (const auto &pair : all_pairs()) {
        out << pair.label() << ',' << to_string(f[pair.slot()]) << ','
            << fmt::format("{:.6f}", to_double(f[pair.slot()])) << '\n';
    }
    return out.str();
}

std::string expected_fraction_text(double p_minus) {
    try {
        return to_string(expected_case_b_same_fraction(parse_rational(fmt::format("{}", p_minus))));
    } catch (const std::invalid_argument &) {
        return fmt::format("{:.6f}", p_minus * p_minus + (1 - p_minus * p_minus) / 3);
    }
}

void add_common(CLI::App *sub, Output &o, bool seeded) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", o.out_dir, "Write one file per table into this directory instead of stdout");
    if (seeded) {
        sub->add_option("--seed", o.seed, "Master seed (random and echoed when omitted)");
        sub->add_option("--threads", o.threads, "Worker threads; results do not depend on this")
            ->check(CLI::Range(1u, 256u));
        sub->add_option("--chunk-size", o.chunk_size, "Trials per independently seeded chunk")
            ->check(CLI::PositiveNumber);
    }
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Mermin device simulator: quantum singlet statistics, instruction sets, and Lad's G9-vector "
                 "Monte Carlo with exact analysis.",
                 "mermin"};
    app.require_subcommand(1);
    Output opts;

    // quantum
    std::uint64_t quantum_n = 9'000'000;
    std::string quantum_pair;
    auto *quantum = app.add_subcommand(
        "quantum",
        "Sample the quantum Mermin device and check Fact 1 (equal settings always agree, half RR, half GG) and "
        "Fact 2 (different settings agree 1/4 of the time), from P(RR)=P(GG)=cos^2(theta/2)/2.");
    quantum->add_option("--n", quantum_n, "Number of trials")->check(CLI::PositiveNumber);
    quantum->add_option("--pair", quantum_pair, "Fix the setting pair (e.g. 22) instead of choosing uniformly");
    add_common(quantum, opts, true);

    // bell
    std::string bell_dist = "GGR:1,GRG:1,GRR:2";
    std::string bell_json;
    bool bell_exact = false;
    std::uint64_t bell_n = 9'000'000;
    auto *bell = app.add_subcommand(
        "bell",
        "Instruction-set mixture statistics and the Bell bound (case (b) agreement >= 1/3). The default 1:1:2 mix "
        "of G9-2:G9-3:G9-4 gives the per-pair fractions 1.00 0.25 0.25 0.25 1.00 0.50 0.25 0.50 1.00.");
    bell->add_option("--distribution", bell_dist, "Mixture as SET:weight,... (integer, p/q or decimal weights)");
    bell->add_option("--distribution-json", bell_json, "Read the mixture from a JSON object file instead");
    bell->add_flag("--exact", bell_exact, "Print the exact per-pair fractions only, without sampling");
    bell->add_option("--n", bell_n, "Number of simulated trials")->check(CLI::PositiveNumber);
    add_common(bell, opts, true);

    // superdet
    std::uint64_t superdet_n = 9'000'000;
    auto *superdet = app.add_subcommand(
        "superdet",
        "Superdeterministic weighting: RRG/GGR measured at 23 and 32 twice as often as 12, 21, 13, 31 (and the "
        "symmetric rule for the other sets), which reproduces Facts 1 and 2 with uniform pair frequencies.");
    superdet->add_option("--n", superdet_n, "Number of simulated trials")->check(CLI::PositiveNumber);
    add_common(superdet, opts, true);

    // realm
    std::string realm_table = "all";
    auto *realm = app.add_subcommand(
        "realm",
        "Instruction sets and their G9 vectors (the realm matrix R9-4) and the twelve functional relations "
        "{-1,+1}^2 -> {-1,+1}^7 with the three excluded row pairings.");
    realm->add_option("--table", realm_table, "Which table to print")
        ->check(CLI::IsMember({"g9", "relations", "all"}));
    add_common(realm, opts, false);

    // mc
    McConfig mc_cfg;
    auto *mc = app.add_subcommand(
        "mc",
        "Lad's Monte Carlo for one functional relation: total number of -1 results per setting pair over "
        "n generated G9 vectors (relation 23 -> 1456789 by default).");
    mc->add_option("--relation", mc_cfg.relation, "Relation label such as 23 or 67");
    mc->add_option("--n", mc_cfg.n_vectors, "Number of G9 vectors")->check(CLI::PositiveNumber);
    mc->add_option("--p-minus", mc_cfg.p_minus, "Probability that each domain coordinate is -1")
        ->check(CLI::Range(0.0, 1.0));
    add_common(mc, opts, true);

    // mc-all
    std::uint64_t mc_all_n = 1'000'000;
    double mc_all_p = 0.25;
    auto *mc_all = app.add_subcommand(
        "mc-all",
        "All twelve functional relations: tallies, recovered distributions of G9-1..G9-4, and case (b) same "
        "fractions near 3/8.");
    mc_all->add_option("--n", mc_all_n, "Number of G9 vectors per relation")->check(CLI::PositiveNumber);
    mc_all->add_option("--p-minus", mc_all_p, "Probability that each domain coordinate is -1")
        ->check(CLI::Range(0.0, 1.0));
    add_common(mc_all, opts, true);

    // recover
    std::string recover_counts;
    std::uint64_t recover_n = 0;
    bool recover_published = false;
    auto *recover = app.add_subcommand(
        "recover",
        "Recover N1..N4 from a tally by solving N1+N2=c(12), N1+N3=c(13), N1+N4=c(23), N1+..+N4=n, then check "
        "Different/Same = 2 and case (b) fraction = 1/3 + (2/3) N1/n.");
    recover->add_option("--counts", recover_counts, "Nine counts in pair order 11,12,...,33");
    recover->add_option("--n", recover_n, "Number of vectors (default: the 11 count)");
    recover->add_flag("--published", recover_published, "Use Lad's published relation-23 tally");
    add_common(recover, opts, false);

    // hull
    std::string hull_uniform;
    std::string hull_target;
    std::string hull_expect;
    auto *hull = app.add_subcommand(
        "hull",
        "Exact convex-hull membership of a nine-tuple of agreement fractions in the hull of the four G9 vectors: "
        "the quantum point (1/4 in case (b)) lies outside, the 3/8 point inside.");
    hull->add_option("--uniform-b", hull_uniform, "Case (b) fraction shared by all six pairs (e.g. 0.25 or 3/8)");
    hull->add_option("--target", hull_target, "Nine agreement fractions in pair order");
    hull->add_option("--expectations", hull_expect, "Nine +/-1 expectations in pair order");
    add_common(hull, opts, false);

    // report
    std::uint64_t report_n = 1'000'000;
    auto *report = app.add_subcommand(
        "report",
        "Run everything and emit one consolidated document: quantum facts, Bell bound, 1:1:2 table, "
        "superdeterminism, G9 vectors, relations, all twelve Monte Carlo runs with recovery, Different/Same, the "
        "1/3 + excess decomposition, and hull verdicts.");
    report->add_option("--n", report_n, "G9 vectors per relation (device runs use 9n trials)")
        ->check(CLI::PositiveNumber);
    add_common(report, opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n";
        CLI::App *target = &app;
        for (auto *sub : app.get_subcommands()) {
            target = sub;
        }
        err << target->help();
        return kExitUsage;
    }

    Emitter emitter(opts, out);
    try {
        if (quantum->parsed()) {
            const std::uint64_t seed = resolve_seed(opts);
            SelectionPolicy policy = quantum_pair.empty() ? SelectionPolicy::uniform()
                                                          : SelectionPolicy::fixed_pair(SettingPair::from_label(quantum_pair));
            const FactsReport r = run_quantum_experiment(quantum_n, policy, seed, opts.exec());
            emitter.emit(
                "quantum", [&] { return to_text(r); }, [&] { return seed_comment(seed) + to_csv(r); },
                [&] { return to_json(r); });
        } else if (bell->parsed()) {
            SetDistribution d;
            if (!bell_json.empty()) {
                std::ifstream f(bell_json);
                if (!f) {
                    throw std::invalid_argument("cannot read " + bell_json);
                }
                nlohmann::json j;
                try {
                    j = nlohmann::json::parse(f);
                } catch (const nlohmann::json::exception &e) {
                    throw std::invalid_argument(std::string("bad distribution JSON: ") + e.what());
                }
                d = SetDistribution::from_json(j);
            } else {
                d = SetDistribution::parse(bell_dist);
            }
            const auto fractions = mixture_per_pair_fractions(d);
            const Rational case_b = mixture_case_b_fraction(d);
            auto exact_text = [&] {
                std::ostringstream s;
                s << "distribution: " << d.normalized().to_string() << '\n'
                  << "mirror balanced: " << (d.is_mirror_balanced() ? "yes" : "no") << "\n\n"
                  << "fraction of -1 (same colour) results\n"
                  << fractions_to_text(fractions) << "\nexact:";
                for (const auto &pair : all_pairs()) {
                    s << ' ' << pair.label() << '=' << to_string(fractions[pair.slot()]);
                }
                s << "\ncase (b) total: " << to_string(case_b) << " (Bell bound 1/3 "
                  << (case_b >= Rational(1, 3) ? "holds" : "VIOLATED") << ")\n";
                return s.str();
            };
            auto exact_json = [&] {
                nlohmann::json f = nlohmann::json::object();
                for (const auto &pair : all_pairs()) {
                    f[pair.label()] = to_string(fractions[pair.slot()]);
                }
                return nlohmann::json{{"distribution", d.normalized().to_json()},
                                      {"mirror_balanced", d.is_mirror_balanced()},
                                      {"fractions", f},
                                      {"case_b_fraction", to_string(case_b)}};
            };
            if (bell_exact) {
                emitter.emit(
                    "bell", exact_text, [&] { return exact_fractions_csv(fractions); }, exact_json);
            } else {
                const std::uint64_t seed = resolve_seed(opts);
                const FactsReport r = simulate_instruction_sets(d, bell_n, seed, opts.exec());
                emitter.emit(
                    "bell", [&] { return exact_text() + "\n" + to_text(r); },
                    [&] { return seed_comment(seed) + to_csv(r); },
                    [&] {
                        auto j = exact_json();
                        j["simulated"] = to_json(r);
                        return j;
                    });
            }
        } else if (superdet->parsed()) {
            const std::uint64_t seed = resolve_seed(opts);
            const SuperdetScenario sc = build_superdet_scenario();
            const FactsReport r = simulate_superdet(sc, superdet_n, seed, opts.exec());
            emitter.emit(
                "superdet", [&] { return superdet_to_text(sc) + "\n" + to_text(r); },
                [&] { return seed_comment(seed) + to_csv(r); },
                [&] { return nlohmann::json{{"scenario", superdet_to_json(sc)}, {"simulated", to_json(r)}}; });
        } else if (realm->parsed()) {
            const RealmMatrixR94 m = build_realm_matrix();
            const auto relations = enumerate_functional_relations(m);
            const auto excluded = excluded_case_b_row_pairs(m);
            auto excluded_text = [&] {
                std::string s = "excluded case (b) row pairs:";
                for (const auto &[a, b] : excluded) {
                    s += fmt::format(" {}{} ({} with {})", a, b, SettingPair::from_index(a).label(),
                                     SettingPair::from_index(b).label());
                }
                return s + "\n";
            };
            if (realm_table != "relations") {
                emitter.emit(
                    "g9_vectors", [&] { return realm_to_text(m); }, [&] { return realm_to_csv(m); },
                    [&] { return realm_to_json(m); });
            }
            if (realm_table == "all" && opts.out_dir.empty()) {
                out << '\n';
            }
            if (realm_table != "g9") {
                emitter.emit(
                    "functional_relations", [&] { return relations_to_text(relations) + "\n" + excluded_text(); },
                    [&] { return relations_to_csv(relations); },
                    [&] {
                        nlohmann::json ex = nlohmann::json::array();
                        for (const auto &[a, b] : excluded) {
                            ex.push_back(std::to_string(a) + std::to_string(b));
                        }
                        return nlohmann::json{{"relations", relations_to_json(relations)}, {"excluded_row_pairs", ex}};
                    });
            }
        } else if (mc->parsed()) {
            mc_cfg.seed = resolve_seed(opts);
            const TallyTable t = run_simulation(mc_cfg, opts.exec());
            emitter.emit(
                "tally_" + t.config.relation, [&] { return tally_to_text(t); },
                [&] { return seed_comment(t.config.seed) + tally_to_csv(t); }, [&] { return tally_to_json(t); });
        } else if (mc_all->parsed()) {
            const std::uint64_t seed = resolve_seed(opts);
            const auto tables = run_all_relations(mc_all_n, mc_all_p, seed, opts.exec());
            std::vector<DistributionCounts> recovered;
            for (const auto &t : tables) {
                recovered.push_back(recover_distribution(t));
            }
            emitter.emit(
                "mc_all",
                [&] {
                    std::ostringstream s;
                    s << fmt::format("# seed={} generator={} n_vectors={} p_minus={}\n\n", seed, Rng::kName,
                                     mc_all_n, mc_all_p);
                    s << fmt::format("{:<8}", "vector");
                    for (const auto &t : tables) {
                        s << fmt::format(" {:>8}", t.config.relation);
                    }
                    s << '\n';
                    for (int c = 0; c < kNumG9Columns; ++c) {
                        s << fmt::format("{:<8}", RealmMatrixR94::label(c));
                        for (const auto &d : recovered) {
                            s << fmt::format(" {:>8}", d.as_array()[c]);
                        }
                        s << '\n';
                    }
                    s << fmt::format("{:<8}", "case(b)");
                    for (const auto &t : tables) {
                        s << fmt::format(" {:>8.5f}", case_b_same_fraction(t));
                    }
                    s << "\n\nexpected case (b) same fraction: "
                      << expected_fraction_text(mc_all_p) << '\n';
                    return s.str();
                },
                [&] { return seed_comment(seed) + tallies_to_csv(tables); },
                [&] {
                    nlohmann::json runs = nlohmann::json::array();
                    for (size_t i = 0; i < tables.size(); ++i) {
                        auto j = tally_to_json(tables[i]);
                        j["recovered"] = to_json(recovered[i]);
                        runs.push_back(j);
                    }
                    return nlohmann::json{{"seed", seed}, {"runs", runs}};
                });
        } else if (recover->parsed()) {
            std::array<std::uint64_t, kNumPairs> counts{};
            if (recover_published) {
                counts = lad_published::kRelation23Tally;
            } else if (!recover_counts.empty()) {
                counts = parse_list<std::uint64_t, kNumPairs>(
                    recover_counts,
                    [](const std::string &s) {
                        std::size_t used = 0;
                        long long v = std::stoll(s, &used);
                        if (v < 0 || used != s.size()) {
                            throw std::invalid_argument("counts must be nonnegative integers, got '" + s + "'");
                        }
                        return static_cast<std::uint64_t>(v);
                    },
                    "--counts");
            } else {
                throw std::invalid_argument("recover needs --counts or --published");
            }
            const std::uint64_t n = recover_n ? recover_n : counts[0];
            const DistributionCounts d = recover_distribution(counts, n);
            const SameDifferent sd = same_different_ratio(d);
            const CaseBDecomposition dec = decompose_case_b_fraction(d);
            const std::string ratio = sd.ratio ? to_string(*sd.ratio) : "undefined";
            emitter.emit(
                "recover",
                [&] {
                    return fmt::format(
                        "N1 = {}\nN2 = {}\nN3 = {}\nN4 = {}\nn  = {}\n\nSame = {}\nDifferent = {}\n"
                        "Different/Same = {}\n\ncase (b) same fraction = 1/3 + {} = {} ({:.6f})\n",
                        d.n1, d.n2, d.n3, d.n4, d.n, sd.same, sd.different, ratio, to_string(dec.excess),
                        to_string(dec.total), to_double(dec.total));
                },
                [&] {
                    return fmt::format("n1,n2,n3,n4,n,same,different,ratio,case_b_fraction\n{},{},{},{},{},{},{},{},{}\n",
                                       d.n1, d.n2, d.n3, d.n4, d.n, sd.same, sd.different, ratio,
                                       to_string(dec.total));
                },
                [&] {
                    return nlohmann::json{{"recovered", to_json(d)},
                                          {"same", sd.same},
                                          {"different", sd.different},
                                          {"ratio", ratio},
                                          {"case_b_fraction",
                                           {{"base", to_string(dec.base)},
                                            {"excess", to_string(dec.excess)},
                                            {"total", to_string(dec.total)}}}};
                });
        } else if (hull->parsed()) {
            const int given = !hull_uniform.empty() + !hull_target.empty() + !hull_expect.empty();
            if (given != 1) {
                throw std::invalid_argument("hull needs exactly one of --uniform-b, --target, --expectations");
            }
            auto parse_r = [](const std::string &s) { return parse_rational(s); };
            HullQuery q;
            if (!hull_uniform.empty()) {
                q = HullQuery::uniform_case_b(parse_rational(hull_uniform));
            } else if (!hull_target.empty()) {
                q.target = parse_list<Rational, kNumPairs>(hull_target, parse_r, "--target");
            } else {
                q = HullQuery::from_expectations(parse_list<Rational, kNumPairs>(hull_expect, parse_r, "--expectations"));
            }
            const HullVerdict v = hull_membership(q);
            emitter.emit(
                "hull", [&] { return to_string(v) + "\n"; },
                [&] {
                    std::string s = "feasible,w1,w2,w3,w4,certificate\n";
                    s += v.feasible ? "true" : "false";
                    for (int c = 0; c < kNumG9Columns; ++c) {
                        s += "," + (v.weights ? to_string((*v.weights)[c]) : std::string());
                    }
                    return s + "," + v.certificate + "\n";
                },
                [&] { return to_json(v); });
        } else if (report->parsed()) {
            const std::uint64_t seed = resolve_seed(opts);
            const FullReport r = full_report(seed, report_n, opts.exec());
            if (opts.format == "csv") {
                if (opts.out_dir.empty()) {
                    for (const auto &[name, body] : to_csv_tables(r)) {
                        out << "## " << name << '\n' << body << '\n';
                    }
                } else {
                    for (const auto &[name, body] : to_csv_tables(r)) {
                        emitter.write(name, body);
                    }
                }
            } else if (opts.format == "json") {
                emitter.write("report.json", to_json(r).dump(2) + "\n");
            } else {
                emitter.write("report.md", to_markdown(r));
            }
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace mermin::cli
