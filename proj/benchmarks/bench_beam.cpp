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

#include <cmath>
#include <vector>

#include <atma/beam.hpp>

using namespace atma;

namespace
{

std::vector<double> make_grid(double step_deg)
{
    std::vector<double> g;
    for (double t = -90.0; t <= 90.0 + 1e-9; t += step_deg)
        g.push_back(t * pi / 180.0);
    return g;
}

} // namespace

// Full-cut array factor over a dense angle grid.
static void BM_array_factor_cut(benchmark::State &state)
{
    const int m = static_cast<int>(state.range(0));
    const ModConfig cfg{2, 8, 2, 1.0};
    const ArrayConfig acfg{m, 0.5, 1.0e9};
    const auto grid = make_grid(0.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(beam::array_factor(grid, 1, 3, acfg, cfg));
}
BENCHMARK(BM_array_factor_cut)->Arg(4)->Arg(8)->Arg(32);

// Closed-form steering angle (no grid search).
static void BM_beam_angle(benchmark::State &state)
{
    const ModConfig cfg{2, 8, 2, 1.0};
    int d = 0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(beam::beam_angle(1, d, cfg, 0.5));
        d = (d + 1) % cfg.delay_count();
    }
}
BENCHMARK(BM_beam_angle);

BENCHMARK_MAIN();
