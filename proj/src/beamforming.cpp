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

#include "nfr/beamforming.hpp"
#include "nfr/error.hpp"

#include <cmath>

namespace nfr
{
    weight_set weight_set::phase_shifter(const system_config &cfg, subcarrier_vector w)
    {
        require(w.size() == std::size_t(cfg.n_antennas), "weight vector length must equal n_antennas");
        weight_set ws(cfg, weight_kind::phase_shifter);
        w.subcarrier = 0;
        ws.vectors_ = std::make_shared<const std::vector<subcarrier_vector>>(1, std::move(w));
        return ws;
    }

    weight_set weight_set::time_delay(const system_config &cfg, delay_params dp)
    {
        require(std::isfinite(dp.theta_prime) && std::isfinite(dp.alpha_prime), "delay parameters must be finite");
        weight_set ws(cfg, weight_kind::time_delay);
        ws.dp_ = dp;
        return ws;
    }

    weight_set weight_set::per_subcarrier(const system_config &cfg, std::vector<subcarrier_vector> w)
    {
        require(w.size() == std::size_t(cfg.n_subcarriers), "need one weight vector per subcarrier");
        for (const auto &v : w)
            require(v.size() == std::size_t(cfg.n_antennas), "weight vector length must equal n_antennas");
        weight_set ws(cfg, weight_kind::per_subcarrier);
        ws.vectors_ = std::make_shared<const std::vector<subcarrier_vector>>(std::move(w));
        return ws;
    }

    std::optional<delay_params> weight_set::delay() const
    {
        if (kind_ != weight_kind::time_delay)
            return std::nullopt;
        return dp_;
    }

    subcarrier_vector weight_set::vector(int m) const
    {
        require(m >= 1 && m <= cfg_.n_subcarriers, "subcarrier index out of range");
        switch (kind_)
        {
        case weight_kind::phase_shifter:
        {
            auto w = vectors_->front();
            w.subcarrier = m;
            return w;
        }
        case weight_kind::per_subcarrier:
            return (*vectors_)[std::size_t(m - 1)];
        case weight_kind::time_delay:
            break;
        }

        const double k = cfg_.wavenumber(m);
        const double d = cfg_.spacing();
        const double scale = 1.0 / std::sqrt(double(cfg_.n_antennas));
        subcarrier_vector w{std::vector<cdouble>(std::size_t(cfg_.n_antennas)), m};
        for (int i = 0; i < cfg_.n_antennas; ++i)
        {
            const double nd = (cfg_.n_first() + i) * d;
            w.entries[std::size_t(i)] = std::polar(scale, -k * (nd * dp_.theta_prime - nd * nd * dp_.alpha_prime));
        }
        return w;
    }

    weight_set ps_weights(const system_config &cfg, const polar_location &focus)
    {
        focus.validate();
        const double k = cfg.wavenumber_center();
        const double d = cfg.spacing();
        const double alpha = distance_ring::of(focus).alpha;
        const double scale = 1.0 / std::sqrt(double(cfg.n_antennas));
        subcarrier_vector w{std::vector<cdouble>(std::size_t(cfg.n_antennas)), 0};
        for (int i = 0; i < cfg.n_antennas; ++i)
        {
            const double nd = (cfg.n_first() + i) * d;
            w.entries[std::size_t(i)] = std::polar(scale, -k * (nd * focus.theta - nd * nd * alpha));
        }
        return weight_set::phase_shifter(cfg, std::move(w));
    }

    weight_set td_weights(const system_config &cfg, const delay_params &dp)
    {
        return weight_set::time_delay(cfg, dp);
    }

    double gain_kernel(const system_config &cfg, double x, double y)
    {
        const double d = cfg.spacing();
        cdouble acc{0.0, 0.0};
        for (int n = cfg.n_first(); n <= cfg.n_last(); ++n)
        {
            const double nd = n * d;
            acc += std::polar(1.0, nd * x - nd * nd * y);
        }
        return std::abs(acc) / cfg.n_antennas;
    }

    double far_field_gain(const system_config &cfg, double x)
    {
        const double half = cfg.spacing() * x / 2.0;
        const double n = cfg.n_antennas;
        const double denom = std::sin(half);
        if (std::abs(denom) < 1e-12)
            return std::abs(std::cos(n * half) / std::cos(half)); // L'Hopital
        return std::abs(std::sin(n * half) / (n * denom));
    }

    double gain_at(const system_config &cfg, const weight_set &ws, int m, double theta, double alpha, response_mode mode)
    {
        const auto w = ws.vector(m);
        if (mode == response_mode::fresnel)
            return std::abs(transpose_product(w, fresnel_response(cfg, m, theta, alpha)));

        // exact spherical response at the location on ring alpha; residue phase is irrelevant
        require(alpha > 0.0, "exact-mode evaluation needs a finite distance (alpha > 0)");
        const polar_location loc{(1.0 - theta * theta) / (2.0 * alpha), theta};
        return std::abs(transpose_product(w, array_response(cfg, m, loc, response_mode::exact)));
    }

    std::vector<cdouble> response_gains(const system_config &cfg, const polar_location &loc, const weight_set &ws)
    {
        loc.validate();
        const auto dist = element_distances(cfg, loc);
        const std::size_t n_ant = dist.size();
        const double inv_sqrt_n = 1.0 / std::sqrt(double(cfg.n_antennas));

        switch (ws.kind())
        {
        case weight_kind::time_delay:
        {
            const auto dp = *ws.delay();
            const double d = cfg.spacing();
            std::vector<double> path(n_ant);
            for (std::size_t i = 0; i < n_ant; ++i)
            {
                const double nd = (cfg.n_first() + int(i)) * d;
                path[i] = dist[i] + nd * dp.theta_prime - nd * nd * dp.alpha_prime;
            }
            const std::vector<cdouble> amp(n_ant, cdouble(1.0 / cfg.n_antennas, 0.0));
            return sum_phase_ramps(cfg, amp, path);
        }
        case weight_kind::phase_shifter:
        {
            const auto w = ws.vector(1);
            std::vector<cdouble> amp(n_ant);
            for (std::size_t i = 0; i < n_ant; ++i)
                amp[i] = w.entries[i] * inv_sqrt_n;
            return sum_phase_ramps(cfg, amp, dist);
        }
        case weight_kind::per_subcarrier:
            break;
        }

        std::vector<cdouble> out(std::size_t(cfg.n_subcarriers));
        for (int m = 1; m <= cfg.n_subcarriers; ++m)
            out[std::size_t(m - 1)] = transpose_product(array_response(cfg, m, loc), ws.vector(m));
        return out;
    }

} // namespace nfr
