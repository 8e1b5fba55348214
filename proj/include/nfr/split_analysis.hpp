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

#ifndef NFR_SPLIT_ANALYSIS_HPP
#define NFR_SPLIT_ANALYSIS_HPP

#include "nfr/beamforming.hpp"
#include "nfr/system.hpp"

#include <optional>
#include <vector>

namespace nfr
{
    // Where the beam at one subcarrier is focused. theta_m = theta' + 2p / eta_m,
    // alpha_m = alpha' + 2q / (d eta_m); for phase shifters p = q = 0.
    struct focus_point
    {
        int subcarrier = 1;
        double theta = 0.0;
        double alpha = 0.0;
        std::optional<double> r_m; // absent on the far-field ring alpha = 0
        int p = 0;
        int q = 0;
    };

    using focus_locus = std::vector<focus_point>;

    // Beam split of frequency-flat phase shifters matched to `focus` at f_c:
    // (theta_0 / eta_m, alpha_0 / eta_m). Throws outside_visible_region when
    // |theta_0 / eta_m| > 1.
    focus_point lemma1_focus(const system_config &cfg, int m, const polar_location &focus);

    // Focus of time-delay weights w_m(theta', alpha') at subcarrier m.
    //
    // p puts theta_m inside [-1, 1]; when two values qualify the one with the
    // smaller |theta_m| wins, ties going to the negative angle. q is the smallest
    // integer with alpha_m >= 0. Throws no_valid_alias when no p qualifies.
    focus_point lemma2_focus(const system_config &cfg, int m, const delay_params &dp);

    // lemma2_focus for m = 1 .. M
    focus_locus lemma2_locus(const system_config &cfg, const delay_params &dp);

    // Sampling grid of the brute-force focus search
    struct focus_grid
    {
        double theta_min = -1.0;
        double theta_max = 1.0;
        int theta_points = 2049;
        double alpha_min = 0.0;
        double alpha_max = 1.0 / 6.0;
        int alpha_points = 257;

        double theta_step() const { return (theta_max - theta_min) / (theta_points - 1); }
        double alpha_step() const { return (alpha_max - alpha_min) / (alpha_points - 1); }
        double theta_at(int i) const { return theta_min + i * theta_step(); }
        double alpha_at(int j) const { return alpha_min + j * alpha_step(); }
    };

    struct grid_peak
    {
        double theta = 0.0;
        double alpha = 0.0;
        double gain = 0.0;
        int theta_index = 0;
        int alpha_index = 0;
    };

    // Grid argmax of gain_at(ws, m, theta, alpha). Ties resolve to the lowest
    // (alpha, theta) index pair, independent of thread scheduling.
    grid_peak brute_force_focus(const system_config &cfg, const weight_set &ws, int m, const focus_grid &grid);

    // Like brute_force_focus but the grid only has to be well formed; used for
    // slices such as a single distance ring.
    grid_peak grid_search(const system_config &cfg, const weight_set &ws, int m, const focus_grid &grid);

    struct theta_design
    {
        double theta_prime = 0.0;
        int p = 0;
    };

    // Abnormal angle parameter whose rainbow covers [theta_min, theta_max]:
    // theta' = theta_c - 2 ceil(max{f_L (theta_max - theta_c), f_H (theta_c - theta_min)} / B)
    theta_design design_theta_prime(double theta_c, double theta_min, double theta_max, double carrier_hz,
                                    double bandwidth_hz);

} // namespace nfr

#endif
