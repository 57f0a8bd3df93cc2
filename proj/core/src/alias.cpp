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

#include "atma/alias.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace atma
{

cdouble Precoder::extended(int a, int d, int oversampling) const
{
    if (a < 0 || a >= size())
        throw std::domain_error("Precoder::extended: block index outside [0, A)");
    return base[static_cast<std::size_t>(a)] *
           std::polar(1.0, -2.0 * pi * a * static_cast<double>(d) / oversampling);
}

Precoder alternating_precoder(int alias_factor)
{
    if (alias_factor < 1)
        throw std::invalid_argument("alternating_precoder: length must be >= 1");
    Precoder p;
    p.base.resize(static_cast<std::size_t>(alias_factor));
    for (int a = 0; a < alias_factor; ++a)
        p.base[static_cast<std::size_t>(a)] = (a % 2 == 0) ? 1.0 : -1.0;
    return p;
}

Precoder identity_precoder(int alias_factor)
{
    if (alias_factor < 1)
        throw std::invalid_argument("identity_precoder: length must be >= 1");
    Precoder p;
    p.base.assign(static_cast<std::size_t>(alias_factor), cdouble{1.0, 0.0});
    return p;
}

namespace alias
{

cdouble extended_precoder(const Precoder &p, int a, int d, int oversampling)
{
    return p.extended(a, d, oversampling);
}

double aliasing_phase(int i, int d, const ModConfig &cfg)
{
    return modwave::delay_phase(i + cfg.center_block(), d, cfg);
}

cdouble aliased_coef(int i, int d, const ModConfig &cfg, const Precoder &p)
{
    if (p.size() != cfg.alias_factor)
        throw std::invalid_argument("aliased_coef: precoder length must equal alias_factor");
    const int c0 = cfg.center_block();
    cdouble sum = 0.0;
    for (int a = 0; a < cfg.alias_factor; ++a)
        sum += p.base[static_cast<std::size_t>(a)] * modwave::harmonic_coef(i - a + c0, cfg.n_states);
    return std::polar(1.0, aliasing_phase(i, d, cfg)) * sum;
}

cdouble aliased_coef_direct(int i, int d, const ModConfig &cfg, const Precoder &p)
{
    if (p.size() != cfg.alias_factor)
        throw std::invalid_argument("aliased_coef_direct: precoder length must equal alias_factor");
    const int c0 = cfg.center_block();
    cdouble sum = 0.0;
    for (int a = 0; a < cfg.alias_factor; ++a)
        sum += p.extended(a, d, cfg.oversampling) * modwave::delayed_coef(i - a + c0, d, cfg);
    return sum;
}

AliasedSpectrum block_spectrum(const ModConfig &cfg, int d, const Precoder &p, int window)
{
    cfg.validate();
    if (window < 0)
        window = cfg.default_window();
    if (window < cfg.alias_factor)
        throw std::domain_error("block_spectrum: window must cover at least A indices");
    if (p.size() != cfg.alias_factor)
        throw std::invalid_argument("block_spectrum: precoder length must equal alias_factor");

    AliasedSpectrum s;
    s.cfg = cfg;
    s.delay = d;
    s.precoder = p;
    s.frac_shift = cfg.center_block() - (cfg.alias_factor - 1) / 2.0 + 1.0 / cfg.n_states;
    s.coef.i_min = -window;
    s.coef.coef.resize(static_cast<std::size_t>(2 * window + 1));
    for (int i = -window; i <= window; ++i)
        s.coef.coef[static_cast<std::size_t>(i + window)] = aliased_coef(i, d, cfg, p);
    return s;
}

} // namespace alias

std::vector<int> AliasedSpectrum::passband_indices() const
{
    std::vector<int> idx(static_cast<std::size_t>(cfg.alias_factor));
    std::iota(idx.begin(), idx.end(), passband_first());
    return idx;
}

std::vector<int> AliasedSpectrum::pre_alias_passband() const
{
    std::vector<int> idx(static_cast<std::size_t>(cfg.alias_factor));
    std::iota(idx.begin(), idx.end(), -(cfg.alias_factor - 1) + cfg.center_block());
    return idx;
}

std::vector<double> AliasedSpectrum::block_power_db() const
{
    double peak = 0.0;
    for (int i = passband_first(); i <= passband_last(); ++i)
        peak = std::max(peak, std::norm(coef.at(i)));
    std::vector<double> out(coef.coef.size());
    for (std::size_t k = 0; k < coef.coef.size(); ++k)
        out[k] = 10.0 * std::log10(std::norm(coef.coef[k]) / peak + 1e-300); // floor keeps exact nulls finite
    return out;
}

} // namespace atma
