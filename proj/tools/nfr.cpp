// SPDX-License-Identifier: Apache-2.0
//
// nearfield-rainbow: wideband near-field beam split and rainbow beam training
// Copyright (C) 2026 The nearfield-rainbow authors
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

#include "nfr/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    CLI::App app{"Near-field rainbow simulator: gain maps, beam training and rate sweeps"};
    app.require_subcommand(1, 1);

    nfr::cli::run_manifest manifest;
    std::string config_path;
    std::uint64_t seed = 0;
    int trials = 0;

    auto add_common = [&](CLI::App *sub)
    {
        sub->add_option("--config", config_path, "Flat key = value configuration file")->check(CLI::ExistingFile);
        sub->add_option("--out", manifest.out_dir, "Output directory")->capture_default_str();
        sub->add_option("--seed", seed, "Master random seed");
        sub->add_option("--set", manifest.overrides, "Override a config key, KEY=VALUE (repeatable)")
            ->take_all()
            ->allow_extra_args(false);
        sub->add_option("--trials", trials, "Monte-Carlo trials per sweep point");
        sub->add_flag("--fast", manifest.fast, "Use 100 trials");
    };

    add_common(app.add_subcommand("gain-map", "Per-subcarrier array gain along an angle or distance slice"));
    add_common(app.add_subcommand("train", "Run one beam-training procedure"));
    add_common(app.add_subcommand("sweep", "Average rate versus overhead, SNR, distance or angle"));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return nfr::cli::exit_usage;
    }

    auto *sub = app.get_subcommands().front();
    manifest.subcommand = sub->get_name();
    if (sub->count("--config"))
        manifest.config_path = config_path;
    if (sub->count("--seed"))
        manifest.seed = seed;
    if (sub->count("--trials"))
        manifest.trials = trials;

    return nfr::cli::run(manifest, std::cerr);
}
