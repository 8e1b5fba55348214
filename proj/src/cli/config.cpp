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

#include "nfr/cli/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nfr::cli
{
    namespace
    {
        constexpr std::string_view sin_pi_3 = "0.8660254037844386";
        constexpr std::string_view neg_sin_pi_3 = "-0.8660254037844386";

        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        std::vector<std::string_view> split(std::string_view s, char sep)
        {
            std::vector<std::string_view> out;
            while (true)
            {
                const auto pos = s.find(sep);
                out.push_back(trim(s.substr(0, pos)));
                if (pos == std::string_view::npos)
                    break;
                s.remove_prefix(pos + 1);
            }
            return out;
        }

        template <typename T>
        bool parse_number(std::string_view text, T &out)
        {
            if (!text.empty() && text.front() == '+')
                text.remove_prefix(1);
            const auto *end = text.data() + text.size();
            const auto [ptr, ec] = std::from_chars(text.data(), end, out);
            return ec == std::errc() && ptr == end && !text.empty();
        }

        bool is_word(std::string_view s)
        {
            if (s.empty())
                return false;
            for (char c : s)
                if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'))
                    return false;
            return true;
        }

        const key_spec &spec_of(std::string_view key)
        {
            for (const auto &k : known_keys())
                if (k.name == key)
                    return k;
            throw usage_error("unknown config key '" + std::string(key) + "'");
        }

        void check_value(const key_spec &k, std::string_view value)
        {
            auto fail = [&](std::string_view what)
            {
                throw usage_error("config key '" + std::string(k.name) + "': expected " + std::string(what) +
                                  ", got '" + std::string(value) + "'");
            };
            switch (k.type)
            {
            case value_type::integer:
            {
                long long v;
                if (!parse_number(value, v))
                    fail("an integer");
                break;
            }
            case value_type::unsigned_integer:
            {
                std::uint64_t v;
                if (!parse_number(value, v))
                    fail("an unsigned integer");
                break;
            }
            case value_type::real:
            {
                double v;
                if (k.name == "spacing_m" && value == "auto")
                    break;
                if (!parse_number(value, v) || !std::isfinite(v))
                    fail("a finite real number");
                break;
            }
            case value_type::boolean:
                if (value != "true" && value != "false")
                    fail("true or false");
                break;
            case value_type::word:
                if (!is_word(value))
                    fail("a single word");
                break;
            case value_type::real_list:
                for (auto item : split(value, ','))
                {
                    double v;
                    if (!parse_number(item, v) || !std::isfinite(v))
                        fail("a comma separated list of real numbers");
                }
                break;
            case value_type::word_list:
                for (auto item : split(value, ','))
                    if (!is_word(item))
                        fail("a comma separated list of words");
                break;
            }
        }
    } // namespace

    const std::vector<key_spec> &known_keys()
    {
        static const std::vector<key_spec> keys{
            {"seed", value_type::unsigned_integer, "1", "master random seed"},
            // system
            {"n_antennas", value_type::integer, "256", "number of array elements N_t"},
            {"carrier_hz", value_type::real, "60e9", "carrier frequency f_c [Hz]"},
            {"bandwidth_hz", value_type::real, "3e9", "bandwidth B [Hz]"},
            {"n_subcarriers", value_type::integer, "2048", "number of subcarriers M"},
            {"spacing_m", value_type::real, "auto", "element spacing d [m], auto = lambda_c / 2"},
            {"antenna_gain", value_type::real, "4", "antenna gain G_t"},
            {"radiation_pattern", value_type::word, "cos3", "isotropic or cos3"},
            // gain-map
            {"theta_prime", value_type::real, "-6", "delay parameter theta'"},
            {"alpha_prime", value_type::real, "0.05", "delay parameter alpha' [1/m]"},
            {"slices", value_type::word_list, "angle", "gain-map slices: angle, distance"},
            {"angle_min", value_type::real, "-1", "angle slice start"},
            {"angle_max", value_type::real, "1", "angle slice end"},
            {"angle_points", value_type::integer, "2001", "angle slice samples"},
            {"distance_min", value_type::real, "0.5", "distance slice start [m]"},
            {"distance_max", value_type::real, "30", "distance slice end [m]"},
            {"distance_points", value_type::integer, "2000", "distance slice samples"},
            {"gain_map_subcarriers", value_type::integer, "8", "evenly spaced subcarriers per slice"},
            // training
            {"strategy", value_type::word, "rainbow", "exhaustive, rainbow or farfield_rainbow"},
            {"user_r", value_type::real, "10", "user distance r_0 [m]"},
            {"user_theta", value_type::real, "0.1", "user angle theta_0"},
            {"snr_db", value_type::real, "10", "SNR at the carrier [dB]"},
            {"noiseless", value_type::boolean, "false", "disable pilot noise"},
            {"pilot_power", value_type::real, "1", "pilot power P_t [W]"},
            {"theta_min", value_type::real, neg_sin_pi_3, "lower edge of the searched angle range"},
            {"theta_max", value_type::real, sin_pi_3, "upper edge of the searched angle range"},
            {"theta_c", value_type::real, "0", "rainbow focus at the carrier"},
            {"rho_min", value_type::real, "3", "minimum user distance [m]"},
            {"n_angles", value_type::integer, "256", "codebook angles U"},
            {"n_rings", value_type::integer, "10", "codebook distance rings S"},
            // sweep
            {"axis", value_type::word, "snr", "overhead, snr, distance or angle"},
            {"axis_values", value_type::real_list, "-5,0,5,10,15", "sweep points"},
            {"strategies", value_type::word_list, "perfect_csi,rainbow,farfield_rainbow,exhaustive",
             "strategies to evaluate"},
            {"trials", value_type::integer, "1000", "Monte-Carlo trials per point"},
            {"t_max", value_type::integer, "256", "training overhead budget [slots]"},
            {"user_theta_min", value_type::real, neg_sin_pi_3, "user angle distribution, lower edge"},
            {"user_theta_max", value_type::real, sin_pi_3, "user angle distribution, upper edge"},
            {"user_r_min", value_type::real, "3", "user distance distribution, lower edge [m]"},
            {"user_r_max", value_type::real, "30", "user distance distribution, upper edge [m]"},
        };
        return keys;
    }

    config::config()
    {
        for (const auto &k : known_keys())
            values_.emplace(std::string(k.name), std::string(k.default_value));
    }

    config config::parse(std::string_view text, std::string_view origin)
    {
        config cfg;
        int line_no = 0;
        for (auto line : split(text, '\n'))
        {
            ++line_no;
            if (line.empty() || line.front() == '#')
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw usage_error(std::string(origin) + ":" + std::to_string(line_no) + ": expected 'key = value'");
            try
            {
                cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
            }
            catch (const usage_error &e)
            {
                throw usage_error(std::string(origin) + ":" + std::to_string(line_no) + ": " + e.what());
            }
        }
        return cfg;
    }

    config config::load(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw usage_error("cannot read config file '" + path.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str(), path.string());
    }

    void config::set(std::string_view key, std::string_view value)
    {
        const auto &k = spec_of(key);
        check_value(k, value);
        values_[std::string(key)] = std::string(value);
    }

    void config::set_assignment(std::string_view assignment)
    {
        const auto eq = assignment.find('=');
        if (eq == std::string_view::npos)
            throw usage_error("--set expects KEY=VALUE, got '" + std::string(assignment) + "'");
        set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
    }

    const std::string &config::raw(std::string_view key) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            throw usage_error("unknown config key '" + std::string(key) + "'");
        return it->second;
    }

    long long config::get_int(std::string_view key) const
    {
        long long v = 0;
        parse_number(std::string_view(raw(key)), v);
        return v;
    }

    std::uint64_t config::get_u64(std::string_view key) const
    {
        std::uint64_t v = 0;
        parse_number(std::string_view(raw(key)), v);
        return v;
    }

    double config::get_real(std::string_view key) const
    {
        double v = 0.0;
        parse_number(std::string_view(raw(key)), v);
        return v;
    }

    bool config::get_bool(std::string_view key) const { return raw(key) == "true"; }

    std::string config::get_word(std::string_view key) const { return raw(key); }

    std::vector<double> config::get_real_list(std::string_view key) const
    {
        std::vector<double> out;
        for (auto item : split(raw(key), ','))
        {
            double v = 0.0;
            parse_number(item, v);
            out.push_back(v);
        }
        return out;
    }

    std::vector<std::string> config::get_word_list(std::string_view key) const
    {
        std::vector<std::string> out;
        for (auto item : split(raw(key), ','))
            out.emplace_back(item);
        return out;
    }

    std::string config::to_text() const
    {
        std::string out = "# effective configuration\n";
        for (const auto &[key, value] : values_)
            out += key + " = " + value + "\n";
        return out;
    }

    system_config config::system() const
    {
        system_config cfg;
        cfg.n_antennas = int(get_int("n_antennas"));
        cfg.carrier_hz = get_real("carrier_hz");
        cfg.bandwidth_hz = get_real("bandwidth_hz");
        cfg.n_subcarriers = int(get_int("n_subcarriers"));
        if (raw("spacing_m") != "auto")
            cfg.spacing_m = get_real("spacing_m");
        cfg.antenna_gain = get_real("antenna_gain");
        const auto pattern = get_word("radiation_pattern");
        if (pattern == "isotropic")
            cfg.pattern = radiation_pattern::isotropic;
        else if (pattern == "cos3")
            cfg.pattern = radiation_pattern::cos3;
        else
            throw usage_error("radiation_pattern must be isotropic or cos3, got '" + pattern + "'");
        try
        {
            cfg.validate();
        }
        catch (const invalid_argument &e)
        {
            throw usage_error(e.what());
        }
        return cfg;
    }

    scenario config::sweep_scenario() const
    {
        scenario sc;
        sc.system = system();
        sc.theta = {get_real("user_theta_min"), get_real("user_theta_max")};
        sc.distance = {get_real("user_r_min"), get_real("user_r_max")};
        const auto axis = parse_sweep_axis(get_word("axis"));
        if (!axis)
            throw usage_error("axis must be overhead, snr, distance or angle, got '" + get_word("axis") + "'");
        sc.axis = *axis;
        sc.axis_values = get_real_list("axis_values");
        sc.snr_db = get_real("snr_db");
        sc.t_max = int(get_int("t_max"));
        sc.trials = int(get_int("trials"));
        sc.strategies.clear();
        for (const auto &name : get_word_list("strategies"))
        {
            if (name.empty())
                continue;
            const auto s = parse_strategy(name);
            if (!s)
                throw usage_error("unknown strategy '" + name + "'");
            sc.strategies.push_back(*s);
        }
        if (sc.strategies.empty())
            throw usage_error("strategy list is empty");
        sc.seed = get_u64("seed");
        sc.theta_min = get_real("theta_min");
        sc.theta_max = get_real("theta_max");
        sc.theta_c = get_real("theta_c");
        sc.rho_min = get_real("rho_min");
        sc.n_angles = int(get_int("n_angles"));
        sc.n_rings = int(get_int("n_rings"));
        try
        {
            sc.validate();
        }
        catch (const invalid_argument &e)
        {
            throw usage_error(e.what());
        }
        return sc;
    }

    std::string format_exact(double v)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    }

    std::string format_csv(double v)
    {
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        if (std::isnan(v))
            return "nan";
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
        return std::string(buf, res.ptr);
    }

} // namespace nfr::cli
