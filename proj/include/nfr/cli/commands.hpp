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

#ifndef NFR_CLI_COMMANDS_HPP
#define NFR_CLI_COMMANDS_HPP

#include "nfr/cli/config.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nfr::cli
{
    inline constexpr int schema_version = 1;

    enum exit_status : int
    {
        exit_ok = 0,
        exit_usage = 2,
        exit_numerical = 3
    };

    struct run_manifest
    {
        std::string subcommand; // gain-map, train or sweep
        std::optional<std::filesystem::path> config_path;
        std::filesystem::path out_dir = ".";
        std::vector<std::string> overrides; // KEY=VALUE, applied in order
        std::optional<std::uint64_t> seed;
        std::optional<int> trials;
        bool fast = false; // 100 trials unless --trials is given
    };

    // Defaults <- config file <- --set overrides <- --seed / --trials / --fast
    config effective_config(const run_manifest &manifest);

    // Each command writes its CSV files plus `effective.cfg` into out_dir and
    // returns the CSV paths.
    std::vector<std::filesystem::path> cmd_gain_map(const run_manifest &manifest);
    std::vector<std::filesystem::path> cmd_train(const run_manifest &manifest);
    std::vector<std::filesystem::path> cmd_sweep(const run_manifest &manifest);

    // Dispatches on manifest.subcommand and maps failures to exit statuses
    int run(const run_manifest &manifest, std::ostream &log);

    // Writes to a sibling temporary file, then renames it over `path`
    void write_atomically(const std::filesystem::path &path, const std::string &content);

} // namespace nfr::cli

#endif
