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

#ifndef ATMA_FFT_HPP
#define ATMA_FFT_HPP

// Thin FFTW facade, private to the library. Plan creation/destruction is
// serialized behind a mutex (FFTW's planner is not thread-safe); execution is
// concurrent. Conventions match the usual DFT pair: forward unscaled,
// inverse scaled by 1/n.

#include <vector>

#include "atma/types.hpp"

namespace atma
{
namespace fft
{

/// In-place forward DFT, unscaled.
void forward(std::vector<cdouble> &x);

/// In-place inverse DFT, scaled by 1/n.
void inverse(std::vector<cdouble> &x);

/// Swap halves so the zero-frequency bin moves to the middle (index n/2).
void shift(std::vector<cdouble> &x);

/// Inverse of shift (identical for even n).
void ishift(std::vector<cdouble> &x);

} // namespace fft
} // namespace atma

#endif
