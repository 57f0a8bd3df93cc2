// SPDX-License-Identifier: Apache-2.0
//
// atma — aliased time-modulated array OFDM simulation library
// Copyright (C) 2026 the atma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <atma/alias.hpp>
#include <atma/metrics.hpp>

using namespace atma;

// Single aliased coefficient, the innermost hot path of every sweep.
static void BM_aliased_coef(benchmark::State &state)
{
    const int A = static_cast<int>(state.range(0));
    const ModConfig cfg{4, A, 2, 1.0};
    const Precoder p = alternating_precoder(A);
    int i = 0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(alias::aliased_coef(i, 1, cfg, p));
        i = (i + 1) % (2 * A);
    }
}
BENCHMARK(BM_aliased_coef)->Arg(4)->Arg(16)->Arg(64);

// Full windowed spectrum at the default window of 8·A·N coefficients.
static void BM_block_spectrum(benchmark::State &state)
{
    const int A = static_cast<int>(state.range(0));
    const ModConfig cfg{4, A, 2, 1.0};
    const Precoder p = alternating_precoder(A);
    for (auto _ : state)
        benchmark::DoNotOptimize(alias::block_spectrum(cfg, 1, p));
    state.SetComplexityN(A);
}
BENCHMARK(BM_block_spectrum)->Arg(4)->Arg(16)->Arg(64)->Complexity();

// Spectrum plus the three scalar metrics, i.e. one sweep-grid point.
static void BM_sweep_point(benchmark::State &state)
{
    const int A = static_cast<int>(state.range(0));
    const ModConfig cfg{4, A, 2, 1.0};
    const Precoder p = alternating_precoder(A);
    for (auto _ : state)
    {
        const AliasedSpectrum s = alias::block_spectrum(cfg, 0, p);
        benchmark::DoNotOptimize(metrics::aclr_db(s));
        benchmark::DoNotOptimize(metrics::passband_ripple_db(s));
        benchmark::DoNotOptimize(metrics::evm(s));
    }
}
BENCHMARK(BM_sweep_point)->Arg(4)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
