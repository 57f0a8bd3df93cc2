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

#include "atma/modwave.hpp"

#include <cmath>
#include <string>

namespace atma
{

void ModConfig::validate() const
{
    if (n_states < 1)
        throw std::invalid_argument("ModConfig: n_states must be >= 1");
    if (alias_factor < 1)
        throw std::invalid_argument("ModConfig: alias_factor must be >= 1");
    if (oversampling < 1)
        throw std::invalid_argument("ModConfig: oversampling must be >= 1");
    if (oversampling > alias_factor)
        throw std::invalid_argument("ModConfig: oversampling must not exceed alias_factor "
                                    "(switch rate would exceed the sample rate)");
    if (!(sample_rate > 0.0))
        throw std::invalid_argument("ModConfig: sample_rate must be positive");
}

namespace modwave
{

double state_phase(int n, int n_states)
{
    if (n < 0 || n >= n_states)
        throw std::domain_error("state_phase: state index outside [0, N)");
    return 2.0 * pi * n / n_states;
}

cdouble fourier_coeff(int n, int k, int n_states)
{
    if (n < 0 || n >= n_states)
        throw std::domain_error("fourier_coeff: state index outside [0, N)");
    const double x = pi * k / n_states;
    return std::polar(1.0, state_phase(n, n_states)) * sinc(x) * std::polar(1.0, -x);
}

bool harmonic_exists(int k, int n_states)
{
    // k ≡ 1 (mod N); ((k-1) % N) may be negative in C++, normalize.
    const int r = (k - 1) % n_states;
    return r == 0;
}

cdouble harmonic_coef(int i, int n_states)
{
    const double x = pi * (i + 1.0 / n_states);
    return sinc(x) * std::polar(1.0, -x);
}

double delay_phase(int i, int d, const ModConfig &cfg)
{
    const int D = cfg.delay_count();
    if (d < 0 || d >= D)
        throw std::domain_error("delay_phase: delay index outside [0, D)");
    return -2.0 * pi * d / D - 2.0 * pi * (static_cast<double>(d) / cfg.oversampling) * i;
}

cdouble delayed_coef(int i, int d, const ModConfig &cfg)
{
    return harmonic_coef(i, cfg.n_states) * std::polar(1.0, delay_phase(i, d, cfg));
}

HarmonicSpectrum spectrum(const ModConfig &cfg, int d, int window)
{
    cfg.validate();
    if (window < 0)
        window = cfg.default_window();
    HarmonicSpectrum s;
    s.i_min = -window;
    s.coef.resize(static_cast<std::size_t>(2 * window + 1));
    for (int i = -window; i <= window; ++i)
        s.coef[static_cast<std::size_t>(i + window)] = delayed_coef(i, d, cfg);
    return s;
}

std::vector<cdouble> waveform_samples(const ModConfig &cfg, int d, std::size_t sample_count, int upsample)
{
    cfg.validate();
    if (upsample < 1)
        throw std::domain_error("waveform_samples: upsample factor must be >= 1");
    if (d < 0 || d >= cfg.delay_count())
        throw std::domain_error("waveform_samples: delay index outside [0, D)");
    const long long state_len = static_cast<long long>(cfg.alias_factor) * upsample; // A·L samples per state
    if (state_len % cfg.oversampling != 0)
        throw std::domain_error("waveform_samples: switching instants off the sample grid "
                                "(A*upsample not divisible by oversampling)");
    const long long period = static_cast<long long>(cfg.n_states) * state_len; // N·A·L
    if (sample_count == 0 || sample_count % static_cast<std::size_t>(period) != 0)
        throw std::domain_error("waveform_samples: sample_count must be a positive multiple of the period N*A*upsample");

    const long long shift = static_cast<long long>(d) * (state_len / cfg.oversampling); // d fine steps of T_sw
    std::vector<cdouble> out(sample_count);
    // One state table; the waveform only ever takes N distinct values.
    std::vector<cdouble> value(static_cast<std::size_t>(cfg.n_states));
    for (int n = 0; n < cfg.n_states; ++n)
        value[static_cast<std::size_t>(n)] = std::polar(1.0, state_phase(n, cfg.n_states));
    for (std::size_t t = 0; t < sample_count; ++t)
    {
        const long long u = (static_cast<long long>(t) - shift) % period;
        const long long tt = u < 0 ? u + period : u;
        out[t] = value[static_cast<std::size_t>(tt / state_len)];
    }
    return out;
}

} // namespace modwave
} // namespace atma
