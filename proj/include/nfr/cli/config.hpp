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

#ifndef NFR_CLI_CONFIG_HPP
#define NFR_CLI_CONFIG_HPP

#include "nfr/error.hpp"
#include "nfr/evaluation.hpp"
#include "nfr/system.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nfr::cli
{
    // Bad command line, bad config key or value; maps to exit status 2
    class usage_error : public error
    {
    public:
        using error::error;
    };

    enum class value_type
    {
        integer,
        unsigned_integer,
        real,
        boolean,
        word,      // single token from a fixed or free vocabulary
        real_list, // comma separated reals
        word_list  // comma separated words
    };

    struct key_spec
    {
        std::string_view name;
        value_type type;
        std::string_view default_value;
        std::string_view help;
    };

    // Every key accepted in a config file or via --set, with its default
    const std::vector<key_spec> &known_keys();

    // Flat `key = value` configuration. Blank lines and lines starting with '#'
    // are ignored. Unknown keys and malformed values raise usage_error.
    class config
    {
    public:
        config(); // all defaults

        static config parse(std::string_view text, std::string_view origin = "<text>");
        static config load(const std::filesystem::path &path);

        void set(std::string_view key, std::string_view value);
        void set_assignment(std::string_view assignment); // "key=value"

        const std::string &raw(std::string_view key) const;
        long long get_int(std::string_view key) const;
        std::uint64_t get_u64(std::string_view key) const;
        double get_real(std::string_view key) const;
        bool get_bool(std::string_view key) const;
        std::string get_word(std::string_view key) const;
        std::vector<double> get_real_list(std::string_view key) const;
        std::vector<std::string> get_word_list(std::string_view key) const;

        // Canonical text form: every key, sorted, one per line. Parsing the
        // result gives back an equal config.
        std::string to_text() const;

        system_config system() const;
        scenario sweep_scenario() const;

        bool operator==(const config &) const = default;

    private:
        std::map<std::string, std::string, std::less<>> values_;
    };

    // Shortest decimal text that parses back to the same double
    std::string format_exact(double v);

    // 12 significant digits, locale independent
    std::string format_csv(double v);

} // namespace nfr::cli

#endif
