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

#ifndef ATMA_TOOLS_EXPERIMENTS_HPP
#define ATMA_TOOLS_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace atma_cli
{

struct CliArgs
{
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed; // overrides the config seed
    int jobs = 0;                      // 0 = hardware concurrency
};

/// Runs the named experiment. Returns the process exit code: 0 on success,
/// 1 when a golden or oracle check fails. Configuration problems are thrown
/// as ConfigError (the caller maps them to exit code 2).
int run_experiment(const std::string &name, const CliArgs &args);

} // namespace atma_cli

#endif
