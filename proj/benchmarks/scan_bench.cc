// Copyright 2026 The qsep Authors
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

#include <random>

#include "benchmark/benchmark.h"
#include "qsep/blocks.h"
#include "qsep/factorizer.h"
#include "qsep/permutation.h"
#include "qsep/random.h"
#include "qsep/state.h"

using namespace qsep;

static void apply_mover(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    PureState s = random_state(n, rng);
    auto cut = make_bipartition(n, QubitLabelSet({2, n}));
    std::vector<amp_t> out(s.dim());
    for (auto _ : state) {
        apply_into(cut.mover, s.amplitudes(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * s.dim() * sizeof(amp_t)));
}
BENCHMARK(apply_mover)->DenseRange(8, 20, 4);

static void decompose_product(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    PureState s = tensor(random_state(n / 2, rng), random_state(n - n / 2, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_at(s, n / 2));
    }
}
BENCHMARK(decompose_product)->DenseRange(8, 20, 4);

static void decompose_entangled(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(3);
    PureState s = random_state(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_at(s, n / 2));
    }
}
BENCHMARK(decompose_entangled)->DenseRange(8, 20, 4);

static void ghz_scan(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    PureState s = ghz(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_genuinely_entangled(s));
    }
    state.counters["bipartitions"] = static_cast<double>(bipartition_count(n));
}
BENCHMARK(ghz_scan)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

static void factorize_random_product(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(4);
    std::vector<int> shape(n / 2, 2);
    if (n % 2) {
        shape.push_back(1);
    }
    auto sample = random_product(random_partition(shape, rng), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_factorize(sample.state));
    }
}
BENCHMARK(factorize_random_product)->DenseRange(4, 12, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
