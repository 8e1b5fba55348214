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

#include "nfr/channel.hpp"
#include "nfr/error.hpp"

#include <cmath>

namespace nfr
{
    double exact_element_distance(const system_config &cfg, int n, const polar_location &loc)
    {
        const double nd = n * cfg.spacing();
        return std::sqrt(loc.r_m * loc.r_m + nd * nd - 2.0 * loc.r_m * loc.theta * nd);
    }

    double fresnel_element_distance(const system_config &cfg, int n, const polar_location &loc)
    {
        const double nd = n * cfg.spacing();
        const double alpha = distance_ring::of(loc).alpha;
        return loc.r_m - nd * loc.theta + nd * nd * alpha;
    }

    double path_gain(const system_config &cfg, int m, const polar_location &loc)
    {
        const double lambda_m = speed_of_light / cfg.subcarrier_hz(m);
        const double pattern = cfg.pattern_value(std::asin(loc.theta));
        return std::sqrt(cfg.antenna_gain * pattern) * lambda_m / (4.0 * pi * loc.r_m);
    }

    double path_gain_center(const system_config &cfg, const polar_location &loc)
    {
        const double pattern = cfg.pattern_value(std::asin(loc.theta));
        return std::sqrt(cfg.antenna_gain * pattern) * cfg.wavelength_center() / (4.0 * pi * loc.r_m);
    }

    subcarrier_vector array_response(const system_config &cfg, int m, const polar_location &loc, response_mode mode)
    {
        if (mode == response_mode::fresnel)
            return fresnel_response(cfg, m, loc.theta, distance_ring::of(loc).alpha);

        const double k = cfg.wavenumber(m);
        const double scale = 1.0 / std::sqrt(double(cfg.n_antennas));
        subcarrier_vector out{std::vector<cdouble>(std::size_t(cfg.n_antennas)), m};
        for (int i = 0; i < cfg.n_antennas; ++i)
            out.entries[std::size_t(i)] = std::polar(scale, -k * exact_element_distance(cfg, cfg.n_first() + i, loc));
        return out;
    }

    subcarrier_vector fresnel_response(const system_config &cfg, int m, double theta, double alpha)
    {
        const double k = cfg.wavenumber(m);
        const double d = cfg.spacing();
        const double scale = 1.0 / std::sqrt(double(cfg.n_antennas));
        subcarrier_vector out{std::vector<cdouble>(std::size_t(cfg.n_antennas)), m};
        for (int i = 0; i < cfg.n_antennas; ++i)
        {
            const double nd = (cfg.n_first() + i) * d;
            out.entries[std::size_t(i)] = std::polar(scale, k * (nd * theta - nd * nd * alpha));
        }
        return out;
    }

    std::vector<cdouble> channel(const system_config &cfg, int m, const polar_location &loc, response_mode mode)
    {
        auto a = array_response(cfg, m, loc, mode);
        if (mode == response_mode::fresnel) // restore the residue phase
        {
            const cdouble residue = std::polar(1.0, -cfg.wavenumber(m) * loc.r_m);
            for (auto &v : a.entries)
                v *= residue;
        }
        const double scale = std::sqrt(double(cfg.n_antennas)) * path_gain(cfg, m, loc);
        for (auto &v : a.entries)
            v *= scale;
        return std::move(a.entries);
    }

    std::vector<double> element_distances(const system_config &cfg, const polar_location &loc)
    {
        std::vector<double> out(std::size_t(cfg.n_antennas));
        for (int i = 0; i < cfg.n_antennas; ++i)
            out[std::size_t(i)] = exact_element_distance(cfg, cfg.n_first() + i, loc);
        return out;
    }

    std::vector<cdouble> sum_phase_ramps(const system_config &cfg, std::span<const cdouble> amplitude,
                                         std::span<const double> path)
    {
        require(amplitude.size() == path.size(), "amplitude and path lengths differ");
        constexpr int reseed_every = 64;

        const std::size_t n_ant = path.size();
        const int n_sub = cfg.n_subcarriers;
        const double dk = 2.0 * pi * cfg.subcarrier_step_hz() / speed_of_light;

        std::vector<cdouble> rotator(n_ant), term(n_ant);
        for (std::size_t i = 0; i < n_ant; ++i)
            rotator[i] = std::polar(1.0, -dk * path[i]);

        std::vector<cdouble> out(static_cast<std::size_t>(n_sub));
        for (int m = 1; m <= n_sub; ++m)
        {
            if ((m - 1) % reseed_every == 0)
            {
                const double k = cfg.wavenumber(m);
                for (std::size_t i = 0; i < n_ant; ++i)
                    term[i] = amplitude[i] * std::polar(1.0, -k * path[i]);
            }
            else
            {
                for (std::size_t i = 0; i < n_ant; ++i)
                    term[i] *= rotator[i];
            }
            cdouble acc{0.0, 0.0};
            for (std::size_t i = 0; i < n_ant; ++i)
                acc += term[i];
            out[std::size_t(m - 1)] = acc;
        }
        return out;
    }

} // namespace nfr
