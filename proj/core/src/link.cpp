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

#include "atma/link.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "fft.hpp"

namespace atma
{
namespace link
{

namespace
{

// Exact continuous Fourier-series coefficient of a zero-order-hold waveform
// given its P samples per period: C(k) = DFT[k mod P]/P · sinc(πk/P) · e^{−jπk/P}.
// Exact for every integer k because the waveform is piecewise constant with
// all transitions on the sample grid.
cdouble zoh_coefficient(const std::vector<cdouble> &dft, int k)
{
    const int P = static_cast<int>(dft.size());
    int r = k % P;
    if (r < 0)
        r += P;
    const double x = pi * k / P;
    return dft[static_cast<std::size_t>(r)] / static_cast<double>(P) * sinc(x) * std::polar(1.0, -x);
}

// Per-state complex factors of the (possibly impaired) switch.
std::vector<cdouble> state_values(const ModConfig &cfg, const Impairments &imp)
{
    std::vector<cdouble> value(static_cast<std::size_t>(cfg.n_states));
    const int N = cfg.n_states;
    for (int n = 0; n < N; ++n)
    {
        cdouble v = std::polar(1.0, modwave::state_phase(n, N));
        if (imp.gain_imbalance_db != 0.0 || imp.phase_error_deg != 0.0)
        {
            const double u = (n - (N - 1) / 2.0) / std::max(N - 1, 1);
            v *= std::polar(std::pow(10.0, imp.gain_imbalance_db * u / 20.0), imp.phase_error_deg * u * pi / 180.0);
        }
        value[static_cast<std::size_t>(n)] = v;
    }
    return value;
}

// ZOH samples of the (possibly impaired) modulating waveform, one period.
std::vector<cdouble> waveform_period(const ModConfig &cfg, int d, int upsample, const Impairments &imp)
{
    const long long state_len = static_cast<long long>(cfg.alias_factor) * upsample;
    if (upsample < 1 || state_len % cfg.oversampling != 0)
        throw std::domain_error("link: switching instants off the sample grid "
                                "(A*upsample not divisible by oversampling)");
    if (d < 0 || d >= cfg.delay_count())
        throw std::domain_error("link: delay index outside [0, D)");
    const long long period = static_cast<long long>(cfg.n_states) * state_len;
    const long long shift = static_cast<long long>(d) * (state_len / cfg.oversampling);
    const std::vector<cdouble> value = state_values(cfg, imp);
    std::vector<cdouble> w(static_cast<std::size_t>(period));
    for (long long t = 0; t < period; ++t)
    {
        long long u = (t - shift) % period;
        if (u < 0)
            u += period;
        w[static_cast<std::size_t>(t)] = value[static_cast<std::size_t>(u / state_len)];
    }
    return w;
}

// Band-limited resynthesis of the modulating waveform on the fine grid: keep
// all Fourier-series harmonics |k| < P/2, drop the ambiguous edge bin. The
// result is P-periodic; one period is returned.
std::vector<cdouble> bandlimited_period(const ModConfig &cfg, int d, int upsample, const Impairments &imp)
{
    std::vector<cdouble> w = waveform_period(cfg, d, upsample, imp);
    const int P = static_cast<int>(w.size());
    std::vector<cdouble> dft = w;
    fft::forward(dft);
    std::vector<cdouble> bins(static_cast<std::size_t>(P), cdouble{});
    for (int k = -(P - 1) / 2; k <= (P - 1) / 2; ++k)
    {
        int r = k % P;
        if (r < 0)
            r += P;
        bins[static_cast<std::size_t>(r)] = zoh_coefficient(dft, k);
    }
    // Unscaled backward transform = direct evaluation of the truncated series.
    fft::inverse(bins);
    for (auto &v : bins)
        v *= static_cast<double>(P);
    return bins;
}

// Zero-padded-spectrum interpolation by integer factor L.
std::vector<cdouble> upsample_fourier(std::span<const cdouble> x, int L)
{
    const std::size_t n = x.size();
    std::vector<cdouble> X(x.begin(), x.end());
    fft::forward(X);
    fft::shift(X);
    std::vector<cdouble> Xu(n * static_cast<std::size_t>(L), cdouble{});
    std::copy(X.begin(), X.end(), Xu.begin() + static_cast<std::ptrdiff_t>((Xu.size() - n) / 2));
    fft::ishift(Xu);
    fft::inverse(Xu);
    for (auto &v : Xu)
        v *= static_cast<double>(L);
    return Xu;
}

} // namespace

std::vector<cdouble> random_qpsk(int count, std::uint64_t seed)
{
    if (count < 0)
        throw std::invalid_argument("random_qpsk: count must be non-negative");
    std::mt19937_64 rng(seed);
    const double s = std::sqrt(0.5);
    std::vector<cdouble> out(static_cast<std::size_t>(count));
    for (auto &v : out)
    {
        const std::uint64_t bits = rng() & 3u; // two bits per symbol, fixed mapping
        v = cdouble{(bits & 1u) ? -s : s, (bits & 2u) ? -s : s};
    }
    return out;
}

OfdmFrame build_frame(std::span<const cdouble> payload, const ModConfig &cfg, int d, const Precoder &p,
                      int cp_length)
{
    cfg.validate();
    if (p.size() != cfg.alias_factor)
        throw std::invalid_argument("build_frame: precoder length must equal alias_factor");
    if (d < 0 || d >= cfg.delay_count())
        throw std::invalid_argument("build_frame: delay index outside [0, D)");
    const int Kb = static_cast<int>(payload.size());
    if (Kb == 0 || Kb % cfg.n_states != 0)
        throw std::invalid_argument("build_frame: payload length must be a positive multiple of n_states");
    if (cp_length < 0 || cp_length % cfg.n_states != 0)
        throw std::invalid_argument("build_frame: cp_length must be a non-negative multiple of n_states");
    for (const cdouble &s : payload)
        if (s == cdouble{})
            throw std::invalid_argument("build_frame: constellation symbols must be nonzero");

    OfdmFrame f;
    f.cfg = cfg;
    f.delay = d;
    f.precoder = p;
    f.block_size = Kb;
    f.cp_length = cp_length;
    f.payload.assign(payload.begin(), payload.end());

    const int K = cfg.alias_factor * Kb;
    f.subcarriers.resize(static_cast<std::size_t>(K));
    for (int a = 0; a < cfg.alias_factor; ++a)
    {
        const cdouble v = p.extended(a, d, cfg.oversampling);
        for (int k = 0; k < Kb; ++k)
            f.subcarriers[static_cast<std::size_t>(a * Kb + k)] = v * f.payload[static_cast<std::size_t>(k)];
    }

    std::vector<cdouble> x = f.subcarriers; // index 0 = subcarrier −K/2
    fft::ishift(x);
    fft::inverse(x);
    f.time_samples.resize(static_cast<std::size_t>(cp_length + K));
    std::copy(x.end() - cp_length, x.end(), f.time_samples.begin());
    std::copy(x.begin(), x.end(), f.time_samples.begin() + cp_length);
    return f;
}

std::vector<cdouble> modulate_time(std::span<const cdouble> frame_samples, const ModConfig &cfg, int d,
                                   int upsample)
{
    cfg.validate();
    if (frame_samples.empty())
        throw std::domain_error("modulate_time: empty input");
    std::vector<cdouble> up = upsample_fourier(frame_samples, upsample);
    // waveform_samples enforces the on-grid and whole-cycle preconditions
    const std::vector<cdouble> c = modwave::waveform_samples(cfg, d, up.size(), upsample);
    for (std::size_t t = 0; t < up.size(); ++t)
        up[t] *= c[t];
    return up;
}

std::vector<cdouble> modulate_frame(const OfdmFrame &frame, int upsample, const Impairments &imp)
{
    const int K = frame.subcarrier_count();
    const std::size_t KL = static_cast<std::size_t>(K) * static_cast<std::size_t>(upsample);
    const std::size_t cpL = static_cast<std::size_t>(frame.cp_length) * static_cast<std::size_t>(upsample);

    const std::vector<cdouble> period = bandlimited_period(frame.cfg, frame.delay, upsample, imp);
    if (KL % period.size() != 0)
        throw std::domain_error("modulate_frame: symbol does not hold a whole number of modulation cycles");

    std::span<const cdouble> symbol(frame.time_samples.data() + frame.cp_length, static_cast<std::size_t>(K));
    std::vector<cdouble> y = upsample_fourier(symbol, upsample);
    for (std::size_t t = 0; t < KL; ++t)
        y[t] *= period[t % period.size()];

    // The modulated symbol is KL-periodic, so the cyclic prefix is its tail.
    std::vector<cdouble> out(cpL + KL);
    std::copy(y.end() - static_cast<std::ptrdiff_t>(cpL), y.end(), out.begin());
    std::copy(y.begin(), y.end(), out.begin() + static_cast<std::ptrdiff_t>(cpL));
    return out;
}

LinkResult receive(std::span<const cdouble> samples, const OfdmFrame &frame, int upsample,
                   const ReceiveOptions &opt)
{
    const int K = frame.subcarrier_count();
    const int Kb = frame.block_size;
    const int A = frame.cfg.alias_factor;
    const std::size_t KL = static_cast<std::size_t>(K) * static_cast<std::size_t>(upsample);
    const std::size_t cpL = static_cast<std::size_t>(frame.cp_length) * static_cast<std::size_t>(upsample);
    if (samples.size() != cpL + KL)
        throw std::invalid_argument("receive: sample count does not match (N_cp + K) * upsample");

    // Drop CP, transform the fine grid; 1/L keeps the tx subcarrier scale.
    std::vector<cdouble> Y(samples.begin() + static_cast<std::ptrdiff_t>(cpL), samples.end());
    fft::forward(Y);
    fft::shift(Y);
    for (auto &v : Y)
        v /= static_cast<double>(upsample);

    // Band select (brick-wall to B) centered on the modulation frequency
    // offset, p = K_b/N subcarriers.
    const int p = Kb / frame.cfg.n_states;
    const std::size_t lo = KL / 2 - static_cast<std::size_t>(K) / 2 + static_cast<std::size_t>(p);
    if (lo + static_cast<std::size_t>(K) > KL)
        throw std::invalid_argument("receive: upsample factor too small to hold the offset band");

    LinkResult r;
    r.per_block_gain.resize(static_cast<std::size_t>(A));
    r.demodulated.resize(static_cast<std::size_t>(K));

    const int c0 = frame.cfg.center_block();
    const cdouble a0 = modwave::harmonic_coef(0, frame.cfg.n_states);
    double err_power = 0.0;
    double ref_power = 0.0;
    for (int b = 0; b < A; ++b)
    {
        const cdouble *blk = Y.data() + lo + static_cast<std::size_t>(b * Kb);
        cdouble gain = 0.0;
        for (int k = 0; k < Kb; ++k)
            gain += blk[k] / frame.payload[static_cast<std::size_t>(k)];
        gain /= static_cast<double>(Kb);
        r.per_block_gain[static_cast<std::size_t>(b)] = gain;

        cdouble comp;
        if (opt.equalize_amplitude)
        {
            comp = gain; // zero-forcing with the measured complex gain
        }
        else
        {
            // Known-phase compensation only: delay phase, precoder, dominant
            // harmonic amplitude.
            comp = std::polar(1.0, alias::aliasing_phase(b - c0, frame.delay, frame.cfg)) * a0;
            if (opt.undo_precoder)
                comp *= frame.precoder.base[static_cast<std::size_t>(b)];
        }
        for (int k = 0; k < Kb; ++k)
        {
            const cdouble s = blk[k] / comp;
            r.demodulated[static_cast<std::size_t>(b * Kb + k)] = s;
            err_power += std::norm(s - frame.payload[static_cast<std::size_t>(k)]);
            ref_power += std::norm(frame.payload[static_cast<std::size_t>(k)]);
        }
    }
    r.measured_evm = std::sqrt(err_power / ref_power);

    if (opt.spectrum_bins >= 256)
        r.measured_spectrum = measure_spectrum(samples, opt.spectrum_bins);
    return r;
}

std::vector<cdouble> add_awgn(std::span<const cdouble> samples, double snr_db, std::uint64_t seed)
{
    double power = 0.0;
    for (const cdouble &v : samples)
        power += std::norm(v);
    power /= static_cast<double>(samples.size());
    const double sigma = std::sqrt(power * std::pow(10.0, -snr_db / 10.0) / 2.0);

    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53; }; // (0, 1]
    std::vector<cdouble> out(samples.begin(), samples.end());
    for (auto &v : out)
    {
        // Box–Muller; avoids platform-dependent normal_distribution internals.
        const double radius = std::sqrt(-2.0 * std::log(uniform()));
        const double angle = 2.0 * pi * uniform();
        v += sigma * cdouble{radius * std::cos(angle), radius * std::sin(angle)};
    }
    return out;
}

std::vector<double> measure_spectrum(std::span<const cdouble> samples, int resolution_bins)
{
    if (resolution_bins < 256)
        throw std::domain_error("measure_spectrum: resolution_bins must be >= 256");
    const std::size_t n = static_cast<std::size_t>(resolution_bins);
    const std::size_t windows = samples.size() / n;
    if (windows == 0)
        throw std::domain_error("measure_spectrum: input shorter than one window");

    std::vector<double> acc(n, 0.0);
    std::vector<cdouble> work(n);
    for (std::size_t w = 0; w < windows; ++w)
    {
        std::copy(samples.begin() + static_cast<std::ptrdiff_t>(w * n),
                  samples.begin() + static_cast<std::ptrdiff_t>((w + 1) * n), work.begin());
        fft::forward(work);
        fft::shift(work);
        for (std::size_t k = 0; k < n; ++k)
            acc[k] += std::norm(work[k]);
    }
    const double peak = *std::max_element(acc.begin(), acc.end());
    for (auto &v : acc)
        v = 10.0 * std::log10(v / peak + 1e-300);
    return acc;
}

HarmonicSpectrum dft_oracle(const ModConfig &cfg, int d, int upsample, int window)
{
    cfg.validate();
    if (window < 0)
        window = cfg.default_window();
    const std::vector<cdouble> w =
        waveform_period(cfg, d, upsample, Impairments{}); // ideal switch, one period
    const int P = static_cast<int>(w.size());

    // Direct DFT, deliberately independent of any FFT library.
    std::vector<cdouble> dft(static_cast<std::size_t>(P), cdouble{});
    for (int j = 0; j < P; ++j)
    {
        cdouble acc = 0.0;
        for (int t = 0; t < P; ++t)
        {
            const long long phase_idx = (static_cast<long long>(j) * t) % P;
            acc += w[static_cast<std::size_t>(t)] * std::polar(1.0, -2.0 * pi * static_cast<double>(phase_idx) / P);
        }
        dft[static_cast<std::size_t>(j)] = acc;
    }

    HarmonicSpectrum s;
    s.i_min = -window;
    s.coef.resize(static_cast<std::size_t>(2 * window + 1));
    for (int i = -window; i <= window; ++i)
        s.coef[static_cast<std::size_t>(i + window)] = zoh_coefficient(dft, 1 + i * cfg.n_states);
    return s;
}

} // namespace link
} // namespace atma
