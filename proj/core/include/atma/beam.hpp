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

#ifndef ATMA_BEAM_HPP
#define ATMA_BEAM_HPP

/**
 * @file beam.hpp
 * @brief Uniform-linear-array factor per harmonic index and delay, and the
 *        closed-form beam-steering directions.
 *
 * Each array element applies the same modulating sequence shifted by m·d delay
 * steps; the per-harmonic progressive phase across elements steers a beam whose
 * direction depends on (i, d). Isotropic elements, no mutual coupling.
 */

#include <optional>
#include <span>
#include <vector>

#include "atma/modwave.hpp"
#include "atma/types.hpp"

namespace atma
{

/// Uniform linear array: M elements spaced `spacing` wavelengths apart at
/// carrier frequency f_c.
struct ArrayConfig
{
    int elements = 8;
    double spacing = 0.5; ///< d_λ, in carrier wavelengths
    double carrier = 1.0e9; ///< f_c in Hz

    void validate() const; ///< throws std::invalid_argument when out of range
};

namespace beam
{

/// Progressive phase of the m-th element at harmonic i and delay d:
/// φ_m(i,d) = −2πm(d/D)(1 + (i + ⌊(A−1)/2⌋)N). Linear in m.
double element_phase(int m, int i, int d, const ModConfig &cfg);

/// Array factor over an angle grid (radians), 1/√M-normalized:
/// AF(θ) = α(i)·(1/√M)·Σ_m e^{jφ_m(i,d)}·e^{−j2π m d_λ sinθ·η}.
/// simplified=true sets η = 1 (harmonic offset negligible versus the
/// carrier); simplified=false uses η = 1 + (1/N + i)·f_p/f_c.
std::vector<cdouble> array_factor(std::span<const double> theta, int i, int d, const ArrayConfig &acfg,
                                  const ModConfig &cfg, bool simplified = true);

/// Closed-form steering direction in radians,
/// θ(i,d) = −arcsin(x̂/d_λ) with x̂ the principal alias in (−1/2, 1/2] of
/// d·(1/D + (i + ⌊(A−1)/2⌋)/O_τ). Returns std::nullopt when |x̂| > d_λ
/// (no beam in visible space).
std::optional<double> beam_angle(int i, int d, const ModConfig &cfg, double spacing);

} // namespace beam
} // namespace atma

#endif
