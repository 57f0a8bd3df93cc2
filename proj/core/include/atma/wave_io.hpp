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

#ifndef ATMA_WAVE_IO_HPP
#define ATMA_WAVE_IO_HPP

/**
 * @file wave_io.hpp
 * @brief Binary waveform exchange format.
 *
 * Layout (all little-endian):
 *   bytes 0–7   magic "ATMAWAV1"
 *   bytes 8–15  sample rate, float64 (Hz)
 *   bytes 16–23 sample count, uint64
 *   then        count × (float64 real, float64 imag), interleaved
 */

#include <filesystem>
#include <vector>

#include "atma/types.hpp"

namespace atma
{
namespace wave_io
{

struct Waveform
{
    double sample_rate = 1.0;
    std::vector<cdouble> samples;
};

/// Writes the waveform; throws std::runtime_error on I/O failure.
void write_waveform(const std::filesystem::path &path, const Waveform &w);

/// Reads a waveform; throws std::runtime_error on I/O failure or a malformed
/// header.
Waveform read_waveform(const std::filesystem::path &path);

} // namespace wave_io
} // namespace atma

#endif
