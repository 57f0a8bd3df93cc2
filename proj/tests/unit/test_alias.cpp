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

#include <cmath>
#include <vector>

#include <doctest.h>

#include <atma/alias.hpp>

using namespace atma;
using doctest::Approx;

namespace
{
double wrap(double x)
{
    return std::remainder(x, 2.0 * pi);
}
} // namespace

TEST_CASE("precoder constructors")
{
    const Precoder alt = alternating_precoder(4);
    REQUIRE(alt.size() == 4);
    CHECK(alt.base[0] == cdouble{1.0, 0.0});
    CHECK(alt.base[1] == cdouble{-1.0, 0.0});
    CHECK(alt.base[2] == cdouble{1.0, 0.0});
    CHECK(alt.base[3] == cdouble{-1.0, 0.0});

    const Precoder id = identity_precoder(3);
    REQUIRE(id.size() == 3);
    for (const cdouble &v : id.base)
        CHECK(v == cdouble{1.0, 0.0});
}

TEST_CASE("delay-extended precoder weights")
{
    const Precoder alt = alternating_precoder(4);

    // d = 0 is the identity extension.
    for (int a = 0; a < 4; ++a)
        CHECK(alt.extended(a, 0, 2) == alt.base[static_cast<std::size_t>(a)]);

    // O_τ = 1: e^{−j2πad} is unity for every integer delay.
    for (int d = 0; d < 4; ++d)
        for (int a = 0; a < 4; ++a)
            CHECK(std::abs(alt.extended(a, d, 1) - alt.base[static_cast<std::size_t>(a)]) < 1e-12);

    // O_τ = 2, a = 1, d = 1: v(1)·e^{−jπ} = (−1)·(−1) = 1.
    CHECK(std::abs(alt.extended(1, 1, 2) - cdouble{1.0, 0.0}) < 1e-12);

    CHECK_THROWS_AS(alias::extended_precoder(alt, -1, 0, 2), std::domain_error);
    CHECK_THROWS_AS(alias::extended_precoder(alt, 4, 0, 2), std::domain_error);
}

TEST_CASE("exactly O_τ distinct extended precoders exist across all delays")
{
    for (int O : {1, 2, 4})
    {
        const int N = 2, A = 4;
        const Precoder p = alternating_precoder(A);
        std::vector<std::vector<cdouble>> seen;
        for (int d = 0; d < N * O; ++d)
        {
            std::vector<cdouble> v(static_cast<std::size_t>(A));
            for (int a = 0; a < A; ++a)
                v[static_cast<std::size_t>(a)] = p.extended(a, d, O);
            bool found = false;
            for (const auto &u : seen)
            {
                double diff = 0.0;
                for (int a = 0; a < A; ++a)
                    diff = std::max(diff, std::abs(u[static_cast<std::size_t>(a)] - v[static_cast<std::size_t>(a)]));
                if (diff < 1e-9)
                {
                    found = true;
                    break;
                }
            }
            if (!found)
                seen.push_back(std::move(v));
        }
        CHECK(static_cast<int>(seen.size()) == O);
    }
}

TEST_CASE("aliased coefficient: degenerate and frozen values")
{
    // A = 1 with the trivial precoder collapses to the plain coefficient.
    {
        ModConfig cfg{4, 1, 1, 1.0};
        const Precoder p = identity_precoder(1);
        for (int i = -8; i <= 8; ++i)
            CHECK(std::abs(alias::aliased_coef(i, 0, cfg, p) - modwave::harmonic_coef(i, 4)) < 1e-15);
    }
    // Frozen spot value: N = 4, A = 2, alternating, d = 0, i = 0.
    {
        ModConfig cfg{4, 2, 1, 1.0};
        const cdouble c = alias::aliased_coef(0, 0, cfg, alternating_precoder(2));
        CHECK(c.real() == Approx(0.8488263631567752).epsilon(1e-12));
        CHECK(c.imag() == Approx(-0.8488263631567751).epsilon(1e-12));
    }
}

TEST_CASE("factored and direct aliased sums agree to rounding")
{
    for (int N : {2, 4, 8})
        for (int A : {2, 4, 8})
            for (int O : {1, 2})
            {
                ModConfig cfg{N, A, O, 1.0};
                const Precoder p = alternating_precoder(A);
                for (int d = 0; d < cfg.delay_count(); ++d)
                    for (int i = -2 * A; i <= 2 * A; ++i)
                    {
                        const cdouble f = alias::aliased_coef(i, d, cfg, p);
                        const cdouble g = alias::aliased_coef_direct(i, d, cfg, p);
                        CHECK(std::abs(f - g) < 1e-12);
                    }
            }
}

TEST_CASE("delay only rotates phases: windowed power is d-independent")
{
    ModConfig cfg{4, 4, 2, 1.0};
    const Precoder p = alternating_precoder(4);
    const AliasedSpectrum ref = alias::block_spectrum(cfg, 0, p);
    double e0 = 0.0;
    for (const cdouble &c : ref.coef.coef)
        e0 += std::norm(c);
    for (int d = 1; d < cfg.delay_count(); ++d)
    {
        const AliasedSpectrum s = alias::block_spectrum(cfg, d, p);
        double e = 0.0;
        for (const cdouble &c : s.coef.coef)
            e += std::norm(c);
        CHECK(e == Approx(e0).epsilon(1e-10));
    }
}

TEST_CASE("alternating precoding cancels sidebands: frozen envelope maxima")
{
    // A = 1 baseline: the strongest sideband of the plain N = 4 sequence.
    double m1 = 0.0;
    {
        ModConfig cfg{4, 1, 1, 1.0};
        const Precoder p = identity_precoder(1);
        for (int i = -64; i <= 64; ++i)
            if (i != 0)
                m1 = std::max(m1, std::abs(alias::aliased_coef(i, 0, cfg, p)));
        CHECK(m1 == Approx(0.3001054387).epsilon(1e-8));
    }
    // A = 2 alternating: every sideband is pushed below the A = 1 envelope.
    double m2 = 0.0;
    {
        ModConfig cfg{4, 2, 1, 1.0};
        const Precoder p = alternating_precoder(2);
        for (int i = -64; i <= 64; ++i)
            if (i != 0 && i != 1) // passband blocks for A = 2
                m2 = std::max(m2, std::abs(alias::aliased_coef(i, 0, cfg, p)));
        CHECK(m2 == Approx(0.1714888221).epsilon(1e-8));
    }
    CHECK(m2 < m1);
}

TEST_CASE("windowed energy converges to A (alternating) and is bounded (identity)")
{
    // The aliased spectrum redistributes exactly A units of power. With the
    // alternating precoder the tail falls off cubically, so a 4096-block
    // window already sits within 1e-9 of the limit; the all-ones precoder
    // converges like 1/W and is only checked against its envelope bound.
    const int W = 4096;
    for (auto [N, A] : {std::pair{2, 2}, {4, 2}, {4, 4}, {2, 8}})
    {
        ModConfig cfg{N, A, 1, 1.0};
        double e_alt = 0.0, e_id = 0.0;
        const Precoder alt = alternating_precoder(A);
        const Precoder id = identity_precoder(A);
        for (int i = -W; i <= W; ++i)
        {
            e_alt += std::norm(alias::aliased_coef(i, 0, cfg, alt));
            e_id += std::norm(alias::aliased_coef(i, 0, cfg, id));
        }
        CHECK(std::abs(e_alt - A) < 1e-9);
        CHECK(std::abs(e_id - A) < 3.0 * A * A / W);
    }
}

TEST_CASE("sideband terms share a single phase branch before summation")
{
    // Outside the passband every replica term α(i−a+c0) falls on the same
    // side of the index origin, so all A contributions carry the same phase
    // branch: cancellation depends on the precoder signs alone.
    for (int N : {2, 4})
        for (int A : {2, 3, 4, 8})
        {
            const int c0 = (A - 1) / 2;
            for (int i = c0 + 1; i <= c0 + 2 * A; ++i) // upper sideband
                for (int a = 0; a < A; ++a)
                {
                    const int idx = i - a + c0;
                    REQUIRE(idx >= 0);
                    const double expect = -pi / N;
                    CHECK(std::abs(wrap(std::arg(modwave::harmonic_coef(idx, N)) - expect)) < 1e-9);
                }
            for (int i = -(A - 1) + c0 - 2 * A; i < -(A - 1) + c0; ++i) // lower sideband
                for (int a = 0; a < A; ++a)
                {
                    const int idx = i - a + c0;
                    REQUIRE(idx < 0);
                    const double expect = -pi / N - pi;
                    CHECK(std::abs(wrap(std::arg(modwave::harmonic_coef(idx, N)) - expect)) < 1e-9);
                }
        }
}

TEST_CASE("block spectrum bookkeeping")
{
    ModConfig cfg{4, 4, 1, 1.0};
    const AliasedSpectrum s = alias::block_spectrum(cfg, 0, alternating_precoder(4));

    CHECK(s.passband_first() == -1);
    CHECK(s.passband_last() == 2);
    CHECK(s.passband_indices() == std::vector<int>{-1, 0, 1, 2});
    CHECK(s.pre_alias_passband() == std::vector<int>{-2, -1, 0, 1});
    CHECK(s.frac_shift == Approx(-0.25).epsilon(1e-15)); // 1 − 3/2 + 1/4
    CHECK(s.block_center(0) == Approx(-0.25 * cfg.pulse_rate()).epsilon(1e-15));
    CHECK(s.block_center(1) - s.block_center(0) == Approx(cfg.pulse_rate()).epsilon(1e-12));

    // Spectrum values match the factored closed form.
    for (int i : {-7, -1, 0, 2, 5})
        CHECK(std::abs(s.coef.at(i) - alias::aliased_coef(i, 0, cfg, alternating_precoder(4))) == 0.0);

    // Normalized powers: 0 dB at the strongest passband block.
    const std::vector<double> db = s.block_power_db();
    REQUIRE(db.size() == s.coef.coef.size());
    double best = -1e300;
    for (int i = s.passband_first(); i <= s.passband_last(); ++i)
        best = std::max(best, db[static_cast<std::size_t>(i - s.coef.i_min)]);
    CHECK(std::abs(best) < 1e-12);
}

TEST_CASE("block spectrum argument checking")
{
    ModConfig cfg{4, 4, 1, 1.0};
    CHECK_THROWS_AS(alias::block_spectrum(cfg, 0, alternating_precoder(2)), std::invalid_argument);
    CHECK_THROWS_AS(alias::block_spectrum(cfg, 0, alternating_precoder(4), 2), std::domain_error);
    CHECK_NOTHROW(alias::block_spectrum(cfg, 0, alternating_precoder(4), 4));
}

TEST_CASE("first sideband of the unit-A spectrum in dB")
{
    ModConfig cfg{4, 1, 1, 1.0};
    const AliasedSpectrum s = alias::block_spectrum(cfg, 0, identity_precoder(1));
    const std::vector<double> db = s.block_power_db();
    const auto at = [&](int i) { return db[static_cast<std::size_t>(i - s.coef.i_min)]; };
    CHECK(std::abs(at(0)) < 1e-12);
    CHECK(at(1) == Approx(-13.979400086720378).epsilon(1e-10));
}
