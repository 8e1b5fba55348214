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

#include "nfr/split_analysis.hpp"
#include "nfr/error.hpp"
#include "nfr/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nfr
{
    namespace
    {
        constexpr double alias_tolerance = 1e-12;

        std::optional<double> ring_distance(double theta, double alpha)
        {
            return distance_ring{alpha}.distance(theta);
        }
    } // namespace

    focus_point lemma1_focus(const system_config &cfg, int m, const polar_location &focus)
    {
        focus.validate();
        const double eta = cfg.eta(m);
        const double theta = focus.theta / eta;
        if (std::abs(theta) > 1.0)
            throw outside_visible_region("phase-shifter focus at subcarrier " + std::to_string(m) +
                                         " leaves the visible region (theta = " + std::to_string(theta) + ")");
        const double alpha = distance_ring::of(focus).alpha / eta;
        return {m, theta, alpha, ring_distance(theta, alpha), 0, 0};
    }

    focus_point lemma2_focus(const system_config &cfg, int m, const delay_params &dp)
    {
        const double eta = cfg.eta(m);
        const double d = cfg.spacing();

        // theta' + 2p/eta in [-1, 1]  <=>  p in [(-1 - theta') eta/2, (1 - theta') eta/2]
        const double lo = (-1.0 - dp.theta_prime) * eta / 2.0;
        const double hi = (1.0 - dp.theta_prime) * eta / 2.0;
        const auto p_lo = static_cast<long long>(std::ceil(lo - alias_tolerance * (1.0 + std::abs(lo))));
        const auto p_hi = static_cast<long long>(std::floor(hi + alias_tolerance * (1.0 + std::abs(hi))));
        if (p_lo > p_hi)
            throw no_valid_alias("no alias of theta' = " + std::to_string(dp.theta_prime) +
                                 " falls inside [-1, 1] at subcarrier " + std::to_string(m));

        long long p = p_lo;
        double theta = dp.theta_prime + 2.0 * double(p) / eta;
        for (long long cand = p_lo + 1; cand <= p_hi; ++cand)
        {
            const double t = dp.theta_prime + 2.0 * double(cand) / eta;
            if (std::abs(t) < std::abs(theta)) // equal |theta| keeps the earlier, negative one
            {
                p = cand;
                theta = t;
            }
        }
        theta = std::clamp(theta, -1.0, 1.0);

        // smallest q with alpha' + 2q/(d eta) >= 0
        const double q_real = -dp.alpha_prime * d * eta / 2.0;
        const auto q = static_cast<long long>(std::ceil(q_real - alias_tolerance * (1.0 + std::abs(q_real))));
        const double alpha = std::max(0.0, dp.alpha_prime + 2.0 * double(q) / (d * eta));

        return {m, theta, alpha, ring_distance(theta, alpha), int(p), int(q)};
    }

    focus_locus lemma2_locus(const system_config &cfg, const delay_params &dp)
    {
        focus_locus out;
        out.reserve(std::size_t(cfg.n_subcarriers));
        for (int m = 1; m <= cfg.n_subcarriers; ++m)
            out.push_back(lemma2_focus(cfg, m, dp));
        return out;
    }

    grid_peak grid_search(const system_config &cfg, const weight_set &ws, int m, const focus_grid &grid)
    {
        require(grid.theta_points >= 2 && grid.alpha_points >= 1, "grid needs >= 2 angles and >= 1 ring");
        require(grid.theta_max > grid.theta_min, "grid angle range is empty");
        require(grid.alpha_points == 1 || grid.alpha_max > grid.alpha_min, "grid ring range is empty");
        constexpr int reseed_every = 64;

        const auto w = ws.vector(m);
        const double k = cfg.wavenumber(m);
        const double d = cfg.spacing();
        const double dtheta = grid.theta_step();
        const std::size_t n_ant = std::size_t(cfg.n_antennas);
        const double scale = 1.0 / std::sqrt(double(cfg.n_antennas));

        std::vector<cdouble> rotator(n_ant);
        for (std::size_t i = 0; i < n_ant; ++i)
            rotator[i] = std::polar(1.0, k * (cfg.n_first() + int(i)) * d * dtheta);

        std::vector<grid_peak> row_best(std::size_t(grid.alpha_points));
        parallel_for(std::size_t(grid.alpha_points), [&](std::size_t j)
        {
            const double alpha = grid.alpha_points == 1 ? grid.alpha_min : grid.alpha_at(int(j));
            std::vector<cdouble> term(n_ant);
            grid_peak best{0.0, alpha, -1.0, 0, int(j)};
            for (int i = 0; i < grid.theta_points; ++i)
            {
                if (i % reseed_every == 0)
                {
                    const double theta = grid.theta_at(i);
                    for (std::size_t a = 0; a < n_ant; ++a)
                    {
                        const double nd = (cfg.n_first() + int(a)) * d;
                        term[a] = w.entries[a] * std::polar(scale, k * (nd * theta - nd * nd * alpha));
                    }
                }
                else
                {
                    for (std::size_t a = 0; a < n_ant; ++a)
                        term[a] *= rotator[a];
                }
                cdouble acc{0.0, 0.0};
                for (const auto &t : term)
                    acc += t;
                const double g = std::abs(acc);
                if (g > best.gain)
                {
                    best.gain = g;
                    best.theta = grid.theta_at(i);
                    best.theta_index = i;
                }
            }
            row_best[j] = best;
        });

        grid_peak best = row_best.front();
        for (const auto &row : row_best)
            if (row.gain > best.gain)
                best = row;
        return best;
    }

    grid_peak brute_force_focus(const system_config &cfg, const weight_set &ws, int m, const focus_grid &grid)
    {
        require(grid.theta_min <= -1.0 && grid.theta_max >= 1.0, "focus grid must cover theta in [-1, 1]");
        require(grid.alpha_min <= 0.0 && grid.alpha_max > 0.0, "focus grid must cover alpha in [0, alpha_max]");
        return grid_search(cfg, ws, m, grid);
    }

    theta_design design_theta_prime(double theta_c, double theta_min, double theta_max, double carrier_hz,
                                    double bandwidth_hz)
    {
        if (theta_min == theta_max)
            throw degenerate_range("angular range [theta_min, theta_max] is a single point");
        require(theta_min >= -1.0 && theta_max <= 1.0, "angular range must lie inside [-1, 1]");
        require(theta_min < theta_c && theta_c < theta_max, "theta_c must lie strictly inside (theta_min, theta_max)");
        require(bandwidth_hz > 0.0 && carrier_hz > bandwidth_hz / 2.0, "need 0 < B < 2 f_c");

        const double f_low = carrier_hz - bandwidth_hz / 2.0;
        const double f_high = carrier_hz + bandwidth_hz / 2.0;
        const double span = std::max(f_low * (theta_max - theta_c), f_high * (theta_c - theta_min)) / bandwidth_hz;

        auto covers = [&](long long p)
        {
            const double tp = theta_c - 2.0 * double(p);
            return theta_min >= tp + 2.0 * double(p) * carrier_hz / f_high &&
                   theta_max <= tp + 2.0 * double(p) * carrier_hz / f_low;
        };

        // ceil() of a value that is an integer up to rounding can land one too high
        auto p = static_cast<long long>(std::ceil(span));
        if (p > 1 && covers(p - 1))
            --p;
        while (!covers(p))
            ++p;

        return {theta_c - 2.0 * double(p), int(p)};
    }

} // namespace nfr
