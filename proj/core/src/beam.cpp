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
// ------------------------------------------------------------------------

#include "atma/beam.hpp"

#include <cmath>
#include <stdexcept>

namespace atma
{

void ArrayConfig::validate() const
{
    if (elements < 1)
        throw std::invalid_argument("ArrayConfig: elements must be >= 1");
    if (!(spacing > 0.0))
        throw std::invalid_argument("ArrayConfig: spacing must be positive");
    if (!(carrier > 0.0))
        throw std::invalid_argument("ArrayConfig: carrier must be positive");
}

namespace beam
{

double element_phase(int m, int i, int d, const ModConfig &cfg)
{
    if (m < 0)
        throw std::domain_error("element_phase: element index must be non-negative");
    const double D = cfg.delay_count();
    // Keep the per-element unit separate so the phase is exactly linear in m.
    const double unit = -2.0 * pi * (d / D) * (1.0 + (i + cfg.center_block()) * static_cast<double>(cfg.n_states));
    return m * unit;
}

std::vector<cdouble> array_factor(std::span<const double> theta, int i, int d, const ArrayConfig &acfg,
                                  const ModConfig &cfg, bool simplified)
{
    cfg.validate();
    acfg.validate();
    if (theta.empty())
        throw std::domain_error("array_factor: empty angle grid");

    const int M = acfg.elements;
    // Propagation phase scale: the harmonic travels at f_c + (1/N + i)·f_p.
    const double eta = simplified ? 1.0 : 1.0 + (1.0 / cfg.n_states + i) * cfg.pulse_rate() / acfg.carrier;
    const cdouble scale = modwave::harmonic_coef(i, cfg.n_states) / std::sqrt(static_cast<double>(M));

    std::vector<cdouble> mod_phase(static_cast<std::size_t>(M));
    for (int m = 0; m < M; ++m)
        mod_phase[static_cast<std::size_t>(m)] = std::polar(1.0, element_phase(m, i, d, cfg));

    std::vector<cdouble> out(theta.size());
    for (std::size_t t = 0; t < theta.size(); ++t)
    {
        const double step = -2.0 * pi * acfg.spacing * std::sin(theta[t]) * eta;
        const cdouble w = std::polar(1.0, step); // per-element propagation increment
        cdouble acc = 0.0;
        cdouble prop{1.0, 0.0};
        for (int m = 0; m < M; ++m)
        {
            acc += mod_phase[static_cast<std::size_t>(m)] * prop;
            prop *= w;
        }
        out[t] = scale * acc;
    }
    return out;
}

std::optional<double> beam_angle(int i, int d, const ModConfig &cfg, double spacing)
{
    cfg.validate();
    if (!(spacing > 0.0))
        throw std::domain_error("beam_angle: spacing must be positive");
    const double D = cfg.delay_count();
    const double x = d * (1.0 / D + static_cast<double>(i + cfg.center_block()) / cfg.oversampling);
    // Principal alias in (−1/2, 1/2]: the array response repeats in sin(θ)
    // with period 1/d_λ · 1, so only the reduced offset is observable.
    const double xh = x - std::ceil(x - 0.5);
    const double arg = xh / spacing;
    if (std::abs(arg) > 1.0)
        return std::nullopt;
    return -std::asin(arg);
}

} // namespace beam
} // namespace atma
