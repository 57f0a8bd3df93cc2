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
//
// atma <subcommand> --config <path> [--out <dir>] [--seed <u64>] [--jobs <n>]
// Exit codes: 0 success, 1 golden/oracle-check failure, 2 config or
// constraint error.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <atma/version.hpp>

#include "config.hpp"
#include "experiments.hpp"

namespace
{

const std::vector<std::pair<std::string, std::string>> kExperiments = {
    {"spectrum", "Harmonic/aliased coefficient spectra as CSV"},
    {"aclr-sweep", "Adjacent-channel leakage ratio over (n, a, o_tau, d)"},
    {"ripple-sweep", "Passband block-power ripple over the sweep grid"},
    {"evm-sweep", "Analytic error-vector magnitude over the sweep grid"},
    {"capacity-sweep", "Normalized capacity over the sweep grid and SNR list"},
    {"beampattern", "Array-factor cuts and closed-form steering angles"},
    {"link-sim", "Sample-level modulate/receive runs, optional AWGN"},
    {"oracle-check", "Closed-form coefficients vs direct-DFT reference"},
    {"export-waveform", "Modulating waveform samples in the binary format"},
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"atma experiment runner"};
    app.set_version_flag("--version", atma::version_string);
    app.require_subcommand(1);

    atma_cli::CliArgs args;
    std::uint64_t seed_value = 0;

    for (const auto &[name, description] : kExperiments)
    {
        CLI::App *sub = app.add_subcommand(name, description);
        sub->add_option("-c,--config", args.config_path, "Experiment config file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("-o,--out", args.out_dir, "Output directory (default: .)");
        sub->add_option("-s,--seed", seed_value, "Override the config seed");
        sub->add_option("-j,--jobs", args.jobs, "Worker threads (default: hardware)")
            ->check(CLI::PositiveNumber);
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CLI::App *sub = app.get_subcommands().front();
    if (sub->count("--seed") > 0)
        args.seed = seed_value;

    try
    {
        return atma_cli::run_experiment(sub->get_name(), args);
    }
    catch (const atma_cli::ConfigError &e)
    {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
