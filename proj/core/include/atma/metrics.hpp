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

#ifndef ATMA_METRICS_HPP
#define ATMA_METRICS_HPP

/**
 * @file metrics.hpp
 * @brief Scalar figures of merit (ACLR, ripple, EVM, symbol rate, capacity)
 *        and system-design constraint checking.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "atma/alias.hpp"

namespace atma
{
namespace metrics
{

enum class AdjacentChannel
{
    lower, ///< lower adjacent channel only (the reporting definition)
    both   ///< lower + upper, sensitivity-analysis variant
};

/// Adjacent-channel leakage ratio in dB: passband power over adjacent-channel
/// power, blocks weighted by |α_A|². Throws std::domain_error when the
/// spectrum window does not cover the adjacent channel.
double aclr_db(const AliasedSpectrum &s, AdjacentChannel side = AdjacentChannel::lower);

/// Max-over-min passband block power in dB; 0 for A = 1 by definition.
double passband_ripple_db(const AliasedSpectrum &s);

/// Phase-compensated per-block amplitude gains across the passband, normalized
/// so a hypothetical undistorted block (pure 0-th harmonic) has gain 1.
/// Requires N ≥ 2.
std::vector<double> block_gains(const AliasedSpectrum &s);

/// RMS deviation of the per-block gains from 1: sqrt(mean((g_a − 1)²)).
double evm(const AliasedSpectrum &s);

/// Symbol rate R = (B/A)·K/(K + N_cp). Throws std::domain_error for K = 0.
double symbol_rate(int subcarriers, int cp_length, int alias_factor, double bandwidth);

/// Mean per-block Shannon capacity under the block-gain ripple, normalized by
/// the flat-gain capacity at the same reference SNR (given in dB). Block gains
/// are power-normalized to unit mean before applying the SNR.
double normalized_capacity(const AliasedSpectrum &s, double snr_ref_db = 10.0);

struct ConstraintViolation
{
    enum class Kind
    {
        delay_phase_alignment, ///< 1 + aN is a positive multiple of O_τ
        delay_phase_gcd,       ///< gcd(1 + aN, O_τ) ≠ 1
        block_size_multiple,   ///< K_b not a multiple of N
        degenerate_states      ///< N < 2 (no phase modulation)
    };
    Kind kind;
    int index = 0; ///< offending block offset a (delay_phase_* kinds)
    std::string message;
};

/// Design-rule check for a parameter tuple; an empty list means valid.
/// Violations are data, not errors. The delay-phase rules only bind for
/// O_τ ≥ 2 and are evaluated over the block offsets a spanned by the
/// pre-aliasing passband.
std::vector<ConstraintViolation> check_constraints(const ModConfig &cfg, int block_size);

struct SystemReport
{
    double symbol_rate = 0.0; ///< fraction of B
    double switch_freq = 0.0; ///< fraction of B
    int delay_count = 0;      ///< D
    double aclr_db = 0.0;
    double ripple_db = 0.0;
    double evm = 0.0;
};

/// Error carrying the violation list produced by check_constraints.
class constraint_error : public std::runtime_error
{
  public:
    constraint_error(std::string what, std::vector<ConstraintViolation> v)
        : std::runtime_error(std::move(what)), violations_(std::move(v))
    {
    }
    const std::vector<ConstraintViolation> &violations() const { return violations_; }

  private:
    std::vector<ConstraintViolation> violations_;
};

/// One-stop report for a parameter allocation (alternating precoder, d = 0).
/// Throws constraint_error when check_constraints reports violations.
SystemReport system_report(const ModConfig &cfg, int subcarriers, int block_size, int cp_length);

} // namespace metrics
} // namespace atma

#endif
