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

#ifndef ATMA_ATMA_HPP
#define ATMA_ATMA_HPP

// Umbrella header for the whole library.

#include "atma/alias.hpp"
#include "atma/beam.hpp"
#include "atma/link.hpp"
#include "atma/metrics.hpp"
#include "atma/modwave.hpp"
#include "atma/types.hpp"
#include "atma/version.hpp"
#include "atma/wave_io.hpp"

#endif
