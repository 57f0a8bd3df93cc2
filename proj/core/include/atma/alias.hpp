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

#ifndef ATMA_ALIAS_HPP
#define ATMA_ALIAS_HPP

/**
 * @file alias.hpp
 * @brief Block-repeated baseband structure, phase-only precoding, and the
 *        aliased coefficient α_A(i,d).
 *
 * Aliasing overlaps A harmonic replicas of the block-repeated signal; each
 * resulting block coefficient is a precoder-weighted sum of A plain harmonic
 * coefficients. The alternating precoder (−1)^a drives sideband cancellation.
 */

#include <vector>

#include "atma/modwave.hpp"
#include "atma/types.hpp"

namespace atma
{

/// Phase-only per-block precoder v(a), |v(a)| = 1.
struct Precoder
{
    std::vector<cdouble> base;

    int size() const { return static_cast<int>(base.size()); }

    /// Delay-extended weight v(a,d) = v(a)·e^{−j2πad/O_τ}.
    /// Exactly O_τ distinct extended vectors exist across all d.
    cdouble extended(int a, int d, int oversampling) const;
};

/// Alternating precoder v(a) = (−1)^a of length A.
Precoder alternating_precoder(int alias_factor);

/// All-ones precoder of length A (no-precoding baseline).
Precoder identity_precoder(int alias_factor);

namespace alias
{

/// Free-function form of Precoder::extended. Throws std::domain_error for a
/// outside [0, A).
cdouble extended_precoder(const Precoder &p, int a, int d, int oversampling);

/// Common phase factored out of the aliased sum:
/// φ_τA(i,d) = −2πd/D − 2π(d/O_τ)(i + ⌊(A−1)/2⌋).
double aliasing_phase(int i, int d, const ModConfig &cfg);

/// Aliased coefficient (factored form):
/// α_A(i,d) = e^{jφ_τA(i,d)} Σ_{a=0}^{A−1} v(a)·α(i − a + ⌊(A−1)/2⌋).
cdouble aliased_coef(int i, int d, const ModConfig &cfg, const Precoder &p);

/// Aliased coefficient (direct convolution form):
/// Σ_{a} v(a,d)·α(i − a + ⌊(A−1)/2⌋, d) with the per-term delayed
/// coefficients. Equal to aliased_coef up to rounding; kept as an
/// independent code path for equivalence checks.
cdouble aliased_coef_direct(int i, int d, const ModConfig &cfg, const Precoder &p);

} // namespace alias

/// Aliased block spectrum: coefficients α_A(i,d) over a finite window plus the
/// index bookkeeping of the passband block sets.
struct AliasedSpectrum
{
    ModConfig cfg;
    int delay = 0;
    Precoder precoder;
    HarmonicSpectrum coef;   ///< α_A(i,d) on [−W, W]
    double frac_shift = 0.0; ///< Δ_f = ⌊(A−1)/2⌋ − (A−1)/2 + 1/N, in block widths

    /// First/last index of the post-aliasing passband set
    /// i_bbA = {−⌊(A−1)/2⌋, …, A−1−⌊(A−1)/2⌋} (A indices).
    int passband_first() const { return -cfg.center_block(); }
    int passband_last() const { return cfg.alias_factor - 1 - cfg.center_block(); }
    std::vector<int> passband_indices() const;

    /// Pre-aliasing passband set i_bb = {−(A−1)+⌊(A−1)/2⌋, …, ⌊(A−1)/2⌋}
    /// (the flipped range).
    std::vector<int> pre_alias_passband() const;

    /// Center frequency of block i in Hz, (Δ_f + i)·f_s/A. The fractional
    /// shift enters plotting only; power metrics ignore it.
    double block_center(int i) const { return (frac_shift + i) * cfg.pulse_rate(); }

    /// Per-index power 10·log10(|α_A(i,d)|²), normalized so the strongest
    /// passband block sits at 0 dB; ordered as coef (i = coef.i_min first).
    std::vector<double> block_power_db() const;
};

namespace alias
{

/// Full aliased spectrum over [−window, window]; window < 0 selects
/// cfg.default_window(). Requires window ≥ A and p.size() == A.
AliasedSpectrum block_spectrum(const ModConfig &cfg, int d, const Precoder &p, int window = -1);

} // namespace alias
} // namespace atma

#endif
