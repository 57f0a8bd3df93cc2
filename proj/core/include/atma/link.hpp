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

#ifndef ATMA_LINK_HPP
#define ATMA_LINK_HPP

/**
 * @file link.hpp
 * @brief Sample-level OFDM link simulator and the brute-force DFT oracle.
 *
 * The transmit chain builds a frame of A precoded copies of a K_b-symbol
 * payload, upsamples it by L (zero-padded-spectrum interpolation) and
 * multiplies it with the modulating waveform; the receive chain band-limits,
 * removes the modulation frequency offset and the known per-block phases, and
 * reports per-block gains, EVM and demodulated symbols. The oracle recovers
 * exact Fourier-series coefficients of the piecewise-constant waveform from a
 * direct DFT of one period, independently of the closed forms in modwave.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "atma/alias.hpp"
#include "atma/modwave.hpp"
#include "atma/types.hpp"

namespace atma
{
namespace link
{

/// Optional hardware-error knobs applied to the modulating waveform. Each
/// state n is scaled by 10^(ε·u/20)·e^{jδ·u} with u = (n−(N−1)/2)/max(N−1,1),
/// a symmetric ramp across the states. Zero knobs reproduce the ideal chain
/// bit-exactly.
struct Impairments
{
    double gain_imbalance_db = 0.0; ///< ε, peak-to-center gain spread in dB
    double phase_error_deg = 0.0;   ///< δ, peak-to-center phase offset in degrees
};

/// One OFDM frame: K = A·K_b subcarriers carrying A precoded copies of the
/// payload, plus a cyclic prefix.
struct OfdmFrame
{
    ModConfig cfg;
    int delay = 0;
    Precoder precoder;
    int block_size = 0; ///< K_b
    int cp_length = 0;  ///< N_cp, samples at f_s
    std::vector<cdouble> payload;      ///< K_b constellation symbols
    std::vector<cdouble> subcarriers;  ///< K entries, index 0 = subcarrier −K/2
    std::vector<cdouble> time_samples; ///< N_cp + K samples at f_s, CP first

    int subcarrier_count() const { return cfg.alias_factor * block_size; }
};

struct ReceiveOptions
{
    bool equalize_amplitude = false; ///< zero-forcing per-block gain equalization
    bool undo_precoder = true;       ///< revert the per-block phase precoding
    int spectrum_bins = 0;           ///< when ≥ 256, also fill measured_spectrum
};

struct LinkResult
{
    std::vector<cdouble> per_block_gain;  ///< A measured complex gains (vs payload)
    double measured_evm = 0.0;            ///< RMS symbol error vs the reference payload
    std::vector<double> measured_spectrum; ///< optional periodogram, dB rel. max
    std::vector<cdouble> demodulated;     ///< K symbols after compensation
};

/// Seeded QPSK source: symbols (±1 ± j)/√2, two bits per symbol from a
/// 64-bit Mersenne Twister. Identical seeds give identical sequences on every
/// platform.
std::vector<cdouble> random_qpsk(int count, std::uint64_t seed);

/// Assemble a frame: block a carries v(a,d)·payload; inverse transform plus
/// cyclic prefix fills time_samples. Requires K_b and N_cp to be multiples of
/// N (throws std::invalid_argument; design-rule details via
/// metrics::check_constraints).
OfdmFrame build_frame(std::span<const cdouble> payload, const ModConfig &cfg, int d, const Precoder &p,
                      int cp_length);

/// Element-wise product of the L-times Fourier-upsampled input with the
/// zero-order-hold modulating waveform. The input length must hold an integer
/// number of modulation cycles after upsampling (throws std::domain_error).
/// This is the waveform-level operation; modulate_frame is the band-exact
/// variant used by the receive chain.
std::vector<cdouble> modulate_time(std::span<const cdouble> frame_samples, const ModConfig &cfg, int d,
                                   int upsample);

/// Modulate one frame at L·f_s using the band-limited resynthesis of the
/// modulating waveform (exact Fourier-series coefficients up to the fine-grid
/// Nyquist). The cyclic prefix is the cyclic tail of the modulated symbol, so
/// the output is exactly what a periodic transmitter would emit. Returns
/// (N_cp + K)·L samples.
std::vector<cdouble> modulate_frame(const OfdmFrame &frame, int upsample, const Impairments &imp = {});

/// Receive a modulated frame: drop CP, transform, select the f_s-wide band at
/// the modulation frequency offset, undo the known per-block phases, measure
/// per-block gains and EVM, demodulate. Input length must match
/// (N_cp + K)·L (throws std::invalid_argument).
LinkResult receive(std::span<const cdouble> samples, const OfdmFrame &frame, int upsample,
                   const ReceiveOptions &opt = {});

/// Additive white Gaussian noise at the given SNR (dB, relative to the mean
/// input power), Box–Muller from a seeded 64-bit Mersenne Twister.
std::vector<cdouble> add_awgn(std::span<const cdouble> samples, double snr_db, std::uint64_t seed);

/// Averaged periodogram over non-overlapping rectangular windows of
/// resolution_bins samples, in dB normalized so the peak bin is 0 dB, bins in
/// ascending-frequency order (DC at index resolution_bins/2). Requires
/// resolution_bins ≥ 256 and at least one full window.
std::vector<double> measure_spectrum(std::span<const cdouble> samples, int resolution_bins);

/// Exact Fourier-series coefficients of the modulating waveform recovered
/// from a direct O(P²) DFT of one period (P = N·A·L samples), mapped to
/// harmonic indices i via the k = 1 + iN lattice. window < 0 selects
/// cfg.default_window(). Deliberately brute-force and FFT-free.
HarmonicSpectrum dft_oracle(const ModConfig &cfg, int d, int upsample, int window = -1);

} // namespace link
} // namespace atma

#endif
