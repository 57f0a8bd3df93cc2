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

#ifndef ATMA_MODWAVE_HPP
#define ATMA_MODWAVE_HPP

/**
 * @file modwave.hpp
 * @brief N-state switch modulating waveform and its exact Fourier-series representation.
 *
 * The modulating sequence cycles through N phase states, each held for A samples
 * of the base rate f_s, and can be cyclically delayed in steps of one O_τ-th of a
 * state duration. All coefficient formulas here are exact closed forms; the
 * sample-level counterpart lives in link.hpp (dft_oracle) and is used to
 * cross-validate them.
 */

#include <stdexcept>
#include <vector>

#include "atma/types.hpp"

namespace atma
{

/// Modulation tuple: N phase states, aliasing factor A, delay oversampling O_τ,
/// base sampling rate f_s. All timing quantities derive from these four.
struct ModConfig
{
    int n_states = 4;        ///< N, number of switch phase states
    int alias_factor = 1;    ///< A, aliasing factor (spectral replicas per block position)
    int oversampling = 1;    ///< O_τ, delay-resolution multiplier
    double sample_rate = 1.0; ///< f_s in Hz (1.0 = normalized bandwidth units)

    /// Throws std::invalid_argument when any field is out of range
    /// (N ≥ 1, A ≥ 1, 1 ≤ O_τ ≤ A, f_s > 0).
    void validate() const;

    double sample_period() const { return 1.0 / sample_rate; }                      ///< T_s
    double pulse_duration() const { return alias_factor / sample_rate; }            ///< T_p = A·T_s
    double pulse_rate() const { return sample_rate / alias_factor; }                ///< f_p = f_s/A
    double switch_rate() const { return sample_rate * oversampling / alias_factor; } ///< f_sw = f_s·O_τ/A
    double switch_period() const { return 1.0 / switch_rate(); }                     ///< T_sw
    int delay_count() const { return n_states * oversampling; }                      ///< D = N·O_τ
    double mod_period() const { return n_states * pulse_duration(); }                ///< N·T_p
    /// Frequency shift of the modulated baseband, f_s/(N·A).
    double mod_rate() const { return pulse_rate() / n_states; }
    /// Centering offset ⌊(A−1)/2⌋ used by all aliased-index conventions.
    int center_block() const { return (alias_factor - 1) / 2; }
    /// Default harmonic truncation window; keeps discarded tail power < 1e−6
    /// of the total (quadratic sinc tail bound).
    int default_window() const { return 8 * alias_factor * n_states; }
};

/// Complex coefficients over a contiguous integer index range [i_min, i_max].
struct HarmonicSpectrum
{
    int i_min = 0;
    std::vector<cdouble> coef;

    int i_max() const { return i_min + static_cast<int>(coef.size()) - 1; }
    bool contains(int i) const { return i >= i_min && i <= i_max(); }

    /// Coefficient at index i; throws std::domain_error outside the window.
    const cdouble &at(int i) const
    {
        if (!contains(i))
            throw std::domain_error("HarmonicSpectrum: index outside stored window");
        return coef[static_cast<std::size_t>(i - i_min)];
    }

    /// Coefficient at index i, zero outside the window (truncation rule).
    cdouble value_or_zero(int i) const { return contains(i) ? coef[static_cast<std::size_t>(i - i_min)] : cdouble{}; }
};

namespace modwave
{

/// Phase of the n-th switch state, 2πn/N. Throws std::domain_error for n outside [0, N).
double state_phase(int n, int n_states);

/// Fourier coefficient contribution of state n at harmonic k:
/// e^{jφ(n)}·sinc(πk/N)·e^{−jπk/N}. Throws std::domain_error for n outside [0, N).
cdouble fourier_coeff(int n, int k, int n_states);

/// True iff the modulating sequence has a nonzero component at harmonic k
/// (k ≡ 1 mod N).
bool harmonic_exists(int k, int n_states);

/// Continuous-frequency harmonic coefficient of the undelayed sequence,
/// α(i) = sinc(π(i+1/N))·e^{−jπ(i+1/N)}.
cdouble harmonic_coef(int i, int n_states);

/// Phase shift applied to harmonic i by cyclic delay d:
/// φ_τ(i,d) = −2πd/D − 2π(d/O_τ)·i. Throws std::domain_error for d outside [0, D).
double delay_phase(int i, int d, const ModConfig &cfg);

/// Delayed harmonic coefficient α(i,d) = α(i)·e^{jφ_τ(i,d)}.
cdouble delayed_coef(int i, int d, const ModConfig &cfg);

/// All delayed coefficients on [−window, window]; window < 0 selects
/// cfg.default_window().
HarmonicSpectrum spectrum(const ModConfig &cfg, int d, int window = -1);

/// Piecewise-constant unit-modulus modulating sequence c(t − d·T_sw) sampled at
/// L·f_s with a left-continuous (zero-order-hold) convention. sample_count must
/// be a multiple of the period N·A·L and switching instants must land on the
/// grid (A·L divisible by O_τ); violations throw std::domain_error.
std::vector<cdouble> waveform_samples(const ModConfig &cfg, int d, std::size_t sample_count, int upsample);

} // namespace modwave
} // namespace atma

#endif
