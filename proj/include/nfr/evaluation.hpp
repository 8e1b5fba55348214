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

#ifndef NFR_EVALUATION_HPP
#define NFR_EVALUATION_HPP

#include "nfr/beamforming.hpp"
#include "nfr/system.hpp"
#include "nfr/training.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace nfr
{
    // R = (1/M) sum_m log2(1 + snr |a_m^T(theta_0, r_0) w_m|^2), snr linear
    double average_rate(const system_config &cfg, const polar_location &loc, const weight_set &ws, double snr);

    // Per-subcarrier matched filter w_m = conj(a_m) / |a_m|
    weight_set perfect_csi_weights(const system_config &cfg, const polar_location &loc);

    enum class strategy
    {
        perfect_csi,
        exhaustive,
        rainbow,
        far_field_rainbow
    };

    std::string_view to_string(strategy s);
    std::optional<strategy> parse_strategy(std::string_view name);

    enum class sweep_axis
    {
        overhead, // axis values are training budgets in slots
        snr,      // [dB]
        distance, // fixed r_0 [m], theta_0 drawn
        angle     // fixed theta_0, r_0 drawn
    };

    std::string_view to_string(sweep_axis a);
    std::optional<sweep_axis> parse_sweep_axis(std::string_view name);

    struct uniform_range
    {
        double lo = 0.0;
        double hi = 0.0;

        double draw(std::mt19937_64 &rng) const;
    };

    struct scenario
    {
        system_config system = system_config::reference();
        uniform_range theta{-0.86602540378443865, 0.86602540378443865};
        uniform_range distance{3.0, 30.0};
        sweep_axis axis = sweep_axis::snr;
        std::vector<double> axis_values{10.0};
        double snr_db = 10.0; // used unless axis == snr
        int t_max = 256;
        int trials = 1000;
        std::vector<strategy> strategies{strategy::perfect_csi, strategy::rainbow};
        std::uint64_t seed = 1;

        // training codebook / rainbow design
        double theta_min = -0.86602540378443865;
        double theta_max = 0.86602540378443865;
        double theta_c = 0.0;
        double rho_min = 3.0;
        int n_angles = 256;
        int n_rings = 10;

        void validate() const;
    };

    struct rate_row
    {
        double axis_value = 0.0;
        strategy strat = strategy::perfect_csi;
        double mean_rate = 0.0; // [bit/s/Hz]
        double std_rate = 0.0;  // sample standard deviation
        int trials = 0;
        std::vector<double> samples; // one per trial, in trial order
    };

    struct rate_report
    {
        sweep_axis axis = sweep_axis::snr;
        std::vector<rate_row> rows; // axis-major, strategies in scenario order

        const rate_row &at(strategy s, double axis_value) const;
    };

    // Noise variance that yields `snr_db` at the carrier for P_t = 1:
    // sigma^2 = N_t beta_c^2 / snr
    double noise_variance_for(const system_config &cfg, const polar_location &loc, double snr_db);

    // Monte-Carlo evaluation. Trials run in parallel; the report is bit-identical
    // to sequential execution for a fixed scenario.
    rate_report run_scenario(const scenario &sc);

} // namespace nfr

#endif
