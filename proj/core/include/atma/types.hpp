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

#ifndef ATMA_TYPES_HPP
#define ATMA_TYPES_HPP

#include <complex>
#include <numbers>

namespace atma
{

using cdouble = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// sin(x)/x with sinc(0) = 1 (unnormalized convention used throughout).
inline double sinc(double x)
{
    return x == 0.0 ? 1.0 : std::sin(x) / x;
}

} // namespace atma

#endif
