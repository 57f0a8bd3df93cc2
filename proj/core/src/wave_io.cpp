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

#include "atma/wave_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "wave_io assumes a little-endian host; add byte swapping before porting");

namespace atma
{
namespace wave_io
{

namespace
{
constexpr char magic[8] = {'A', 'T', 'M', 'A', 'W', 'A', 'V', '1'};
}

void write_waveform(const std::filesystem::path &path, const Waveform &w)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("wave_io: cannot open for writing: " + path.string());
    f.write(magic, sizeof(magic));
    f.write(reinterpret_cast<const char *>(&w.sample_rate), sizeof(double));
    const std::uint64_t count = w.samples.size();
    f.write(reinterpret_cast<const char *>(&count), sizeof(count));
    // std::complex<double> is layout-compatible with double[2] (real, imag)
    f.write(reinterpret_cast<const char *>(w.samples.data()),
            static_cast<std::streamsize>(count * 2 * sizeof(double)));
    if (!f)
        throw std::runtime_error("wave_io: write failed: " + path.string());
}

Waveform read_waveform(const std::filesystem::path &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("wave_io: cannot open for reading: " + path.string());
    char m[8];
    f.read(m, sizeof(m));
    if (!f || std::memcmp(m, magic, sizeof(magic)) != 0)
        throw std::runtime_error("wave_io: bad magic in " + path.string());
    Waveform w;
    std::uint64_t count = 0;
    f.read(reinterpret_cast<char *>(&w.sample_rate), sizeof(double));
    f.read(reinterpret_cast<char *>(&count), sizeof(count));
    if (!f)
        throw std::runtime_error("wave_io: truncated header in " + path.string());
    w.samples.resize(count);
    f.read(reinterpret_cast<char *>(w.samples.data()), static_cast<std::streamsize>(count * 2 * sizeof(double)));
    if (!f)
        throw std::runtime_error("wave_io: truncated samples in " + path.string());
    return w;
}

} // namespace wave_io
} // namespace atma
