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

#include "atma/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace atma
{
namespace metrics
{

namespace
{

double band_power(const AliasedSpectrum &s, int offset)
{
    double p = 0.0;
    for (int i = s.passband_first(); i <= s.passband_last(); ++i)
        p += std::norm(s.coef.at(i + offset)); // throws if the window is too small
    return p;
}

} // namespace

double aclr_db(const AliasedSpectrum &s, AdjacentChannel side)
{
    const int A = s.cfg.alias_factor;
    const double num = band_power(s, 0);
    double den = band_power(s, -A);
    if (side == AdjacentChannel::both)
        den += band_power(s, +A);
    return 10.0 * std::log10(num / den);
}

double passband_ripple_db(const AliasedSpectrum &s)
{
    if (s.cfg.alias_factor == 1)
        return 0.0;
    double pmin = std::numeric_limits<double>::infinity();
    double pmax = 0.0;
    for (int i = s.passband_first(); i <= s.passband_last(); ++i)
    {
        const double p = std::norm(s.coef.at(i));
        pmin = std::min(pmin, p);
        pmax = std::max(pmax, p);
    }
    return 10.0 * std::log10(pmax / pmin);
}

std::vector<double> block_gains(const AliasedSpectrum &s)
{
    if (s.cfg.n_states < 2)
        throw std::domain_error("block_gains: requires at least 2 modulation states");
    const int c0 = s.cfg.center_block();
    const cdouble a0 = modwave::harmonic_coef(0, s.cfg.n_states);
    std::vector<double> g(static_cast<std::size_t>(s.cfg.alias_factor));
    for (int b = 0; b < s.cfg.alias_factor; ++b)
    {
        const int i = b - c0;
        // Remove the known delay phase and the block's own precoding weight;
        // what remains is real up to rounding for phase-only precoders.
        const cdouble comp = s.coef.at(i) * std::polar(1.0, -alias::aliasing_phase(i, s.delay, s.cfg)) /
                             s.precoder.base[static_cast<std::size_t>(b)] / a0;
        g[static_cast<std::size_t>(b)] = comp.real();
    }
    return g;
}

double evm(const AliasedSpectrum &s)
{
    const std::vector<double> g = block_gains(s);
    double acc = 0.0;
    for (double v : g)
        acc += (v - 1.0) * (v - 1.0);
    return std::sqrt(acc / static_cast<double>(g.size()));
}

double symbol_rate(int subcarriers, int cp_length, int alias_factor, double bandwidth)
{
    if (subcarriers <= 0)
        throw std::domain_error("symbol_rate: subcarrier count must be positive");
    if (cp_length < 0)
        throw std::domain_error("symbol_rate: cp_length must be non-negative");
    if (alias_factor < 1)
        throw std::domain_error("symbol_rate: alias_factor must be >= 1");
    return bandwidth / alias_factor * subcarriers / (subcarriers + cp_length);
}

double normalized_capacity(const AliasedSpectrum &s, double snr_ref_db)
{
    const double snr = std::pow(10.0, snr_ref_db / 10.0);
    std::vector<double> g = block_gains(s);
    double mean_p = 0.0;
    for (double v : g)
        mean_p += v * v;
    mean_p /= static_cast<double>(g.size());
    double acc = 0.0;
    for (double v : g)
        acc += std::log2(1.0 + snr * v * v / mean_p);
    return acc / static_cast<double>(g.size()) / std::log2(1.0 + snr);
}

std::vector<ConstraintViolation> check_constraints(const ModConfig &cfg, int block_size)
{
    cfg.validate();
    if (block_size < 1)
        throw std::invalid_argument("check_constraints: block_size must be >= 1");
    std::vector<ConstraintViolation> out;

    if (cfg.n_states < 2)
        out.push_back({ConstraintViolation::Kind::degenerate_states, 0,
                       "n_states < 2: the switch never changes phase"});

    if (cfg.oversampling >= 2)
    {
        // Block offsets spanned by the pre-aliasing passband: a = i_bb + ⌊(A−1)/2⌋.
        const int c0 = cfg.center_block();
        const int a_lo = -(cfg.alias_factor - 1) + 2 * c0;
        const int a_hi = 2 * c0;
        for (int a = a_lo; a <= a_hi; ++a)
        {
            const int h = 1 + a * cfg.n_states;
            if (h > 0 && h % cfg.oversampling == 0)
                out.push_back({ConstraintViolation::Kind::delay_phase_alignment, a,
                               "1+aN = " + std::to_string(h) + " is a positive multiple of oversampling at a = " +
                                   std::to_string(a)});
            else if (std::gcd(std::abs(h), cfg.oversampling) != 1)
                out.push_back({ConstraintViolation::Kind::delay_phase_gcd, a,
                               "gcd(1+aN, oversampling) = " +
                                   std::to_string(std::gcd(std::abs(h), cfg.oversampling)) + " at a = " +
                                   std::to_string(a)});
        }
    }

    if (block_size % cfg.n_states != 0)
        out.push_back({ConstraintViolation::Kind::block_size_multiple, 0,
                       "block_size " + std::to_string(block_size) + " is not a multiple of n_states " +
                           std::to_string(cfg.n_states)});
    return out;
}

SystemReport system_report(const ModConfig &cfg, int subcarriers, int block_size, int cp_length)
{
    auto violations = check_constraints(cfg, block_size);
    if (!violations.empty())
    {
        std::string what = "system_report: constraint violations:";
        for (const auto &v : violations)
            what += " [" + v.message + "]";
        throw constraint_error(what, std::move(violations));
    }
    if (subcarriers != cfg.alias_factor * block_size)
        throw std::invalid_argument("system_report: subcarriers must equal alias_factor * block_size");

    const AliasedSpectrum s = alias::block_spectrum(cfg, 0, alternating_precoder(cfg.alias_factor));
    SystemReport r;
    r.symbol_rate = symbol_rate(subcarriers, cp_length, cfg.alias_factor, 1.0);
    r.switch_freq = static_cast<double>(cfg.oversampling) / cfg.alias_factor;
    r.delay_count = cfg.delay_count();
    r.aclr_db = aclr_db(s);
    r.ripple_db = passband_ripple_db(s);
    r.evm = evm(s);
    return r;
}

} // namespace metrics
} // namespace atma
