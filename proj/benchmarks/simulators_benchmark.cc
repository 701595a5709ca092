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

#include "benchmark/benchmark.h"
#include "mermin/analysis.h"
#include "mermin/lad_monte_carlo.h"
#include "mermin/local_realism.h"
#include "mermin/quantum_model.h"

using namespace mermin;

static void BM_quantum_sample_trial(benchmark::State &state) {
    Rng rng(1);
    const SettingPair pair = SettingPair::from_label("23");
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_trial(pair, rng));
    }
}
BENCHMARK(BM_quantum_sample_trial);

static void BM_quantum_experiment(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_quantum_experiment(state.range(0), SelectionPolicy::uniform(), 7));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_quantum_experiment)->Arg(1 << 16)->Arg(1 << 20);

static void BM_instruction_sets(benchmark::State &state) {
    const auto d = SetDistribution::parse("GGR:1,RRG:1,GRG:1,RGR:1,GRR:2,RGG:2").normalized();
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_instruction_sets(d, state.range(0), 7));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_instruction_sets)->Arg(1 << 20);

static void BM_lad_simulation(benchmark::State &state) {
    const McConfig cfg{"23", static_cast<std::uint64_t>(state.range(0)), 0.25, 7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_simulation(cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_lad_simulation)->Arg(1 << 16)->Arg(1'000'000);

static void BM_recover(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(recover_distribution(lad_published::kRelation23Tally, lad_published::kVectors));
    }
}
BENCHMARK(BM_recover);

static void BM_hull_membership(benchmark::State &state) {
    const auto q = HullQuery::uniform_case_b(Rational(3, 8));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hull_membership(q));
    }
}
BENCHMARK(BM_hull_membership);

BENCHMARK_MAIN();
