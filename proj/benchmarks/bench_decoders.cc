// Copyright 2026 The blindrep Authors
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

#include <benchmark/benchmark.h>

#include "blindrep/decoders.h"
#include "blindrep/harness.h"
#include "blindrep/repeater_chain.h"

using namespace blindrep;

static void BM_DecodeBdd(benchmark::State &state) {
    CssCode code = steane_code();
    BitVec s = BitVec::parse("101");
    for (auto _ : state) {
        benchmark::DoNotOptimize(code.decode_bdd(CheckType::Bit, s));
    }
}
BENCHMARK(BM_DecodeBdd);

static void BM_RunTrialBlind(benchmark::State &state) {
    ChainConfig cfg = make_chain(size_t(state.range(0)), steane_code());
    NoiseModel noise = NoiseModel::uniform(0.01);
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial(cfg, noise, seed++, ExecutionMode::Blind));
    }
    state.SetComplexityN(int64_t(cfg.segments()));
}
BENCHMARK(BM_RunTrialBlind)->DenseRange(1, 6)->Complexity();

static void BM_DecodePosterior(benchmark::State &state) {
    ChainConfig cfg = make_chain(size_t(state.range(0)), steane_code());
    TrialResult trial = run_trial(cfg, NoiseModel::uniform(0.01), 1, ExecutionMode::Blind);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_posterior(trial.record, cfg.code));
    }
}
BENCHMARK(BM_DecodePosterior)->DenseRange(1, 6);

static void BM_DecodeConventional(benchmark::State &state) {
    ChainConfig cfg = make_chain(size_t(state.range(0)), steane_code());
    TrialResult trial = run_trial(cfg, NoiseModel::uniform(0.01), 1, ExecutionMode::Blind);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_conventional(trial.record, cfg.code));
    }
}
BENCHMARK(BM_DecodeConventional)->DenseRange(1, 6);

static void BM_EnumerateGamma2(benchmark::State &state) {
    ChainConfig cfg = make_chain(2, steane_code());
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_bounded(cfg, 1, std::nullopt, 1));
    }
}
BENCHMARK(BM_EnumerateGamma2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
