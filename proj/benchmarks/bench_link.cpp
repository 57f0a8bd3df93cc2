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

#include <atma/link.hpp>

using namespace atma;

namespace
{

link::OfdmFrame make_frame(int n, int a, int k_b)
{
    const ModConfig cfg{n, a, 2, 1.0};
    return link::build_frame(link::random_qpsk(k_b, 99), cfg, 1, alternating_precoder(a), n);
}

} // namespace

// Frequency-domain assembly and IFFT of one OFDM symbol.
static void BM_modulate_frame(benchmark::State &state)
{
    const int k_b = static_cast<int>(state.range(0));
    const auto frame = make_frame(4, 8, k_b);
    for (auto _ : state)
        benchmark::DoNotOptimize(link::modulate_frame(frame, 4));
}
BENCHMARK(BM_modulate_frame)->Arg(64)->Arg(256)->Arg(1024);

// Demodulation and per-block gain estimation.
static void BM_receive(benchmark::State &state)
{
    const int k_b = static_cast<int>(state.range(0));
    const auto frame = make_frame(4, 8, k_b);
    const auto samples = link::modulate_frame(frame, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(link::receive(samples, frame, 4));
}
BENCHMARK(BM_receive)->Arg(64)->Arg(256)->Arg(1024);

// The direct-DFT reference, deliberately O(P²): documents the cost gap
// between the oracle and the closed forms it validates.
static void BM_dft_oracle(benchmark::State &state)
{
    const int a = static_cast<int>(state.range(0));
    const ModConfig cfg{4, a, 2, 1.0};
    const int period = cfg.n_states * a * 8;
    const int imax = period / (2 * cfg.n_states) - 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(link::dft_oracle(cfg, 1, 8, imax));
}
BENCHMARK(BM_dft_oracle)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
