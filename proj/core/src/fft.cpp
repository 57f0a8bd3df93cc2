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

#include "fft.hpp"

#include <algorithm>
#include <cstring>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace atma
{
namespace fft
{

namespace
{

std::mutex planner_mutex;

struct FftwDeleter
{
    void operator()(void *p) const { fftw_free(p); }
};

// Runs the transform through an fftw_malloc'd scratch buffer.  Planning on a
// buffer whose alignment never varies keeps the chosen codelets — and thus the
// exact rounding — identical across runs, which the reproducibility guarantees
// rely on.
void transform(std::vector<cdouble> &x, int sign)
{
    if (x.empty())
        throw std::invalid_argument("fft: empty input");
    const std::size_t n = x.size();
    std::unique_ptr<void, FftwDeleter> buf(fftw_malloc(n * sizeof(fftw_complex)));
    if (!buf)
        throw std::bad_alloc();
    auto *data = static_cast<fftw_complex *>(buf.get());
    std::memcpy(data, x.data(), n * sizeof(fftw_complex));
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(n), data, data, sign, FFTW_ESTIMATE);
    }
    if (plan == nullptr)
        throw std::runtime_error("fft: FFTW plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
    std::memcpy(static_cast<void *>(x.data()), data, n * sizeof(fftw_complex));
}

} // namespace

void forward(std::vector<cdouble> &x)
{
    transform(x, FFTW_FORWARD);
}

void inverse(std::vector<cdouble> &x)
{
    transform(x, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(x.size());
    for (auto &v : x)
        v *= scale;
}

void shift(std::vector<cdouble> &x)
{
    std::rotate(x.begin(), x.begin() + static_cast<std::ptrdiff_t>((x.size() + 1) / 2), x.end());
}

void ishift(std::vector<cdouble> &x)
{
    std::rotate(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(x.size() / 2), x.end());
}

} // namespace fft
} // namespace atma
