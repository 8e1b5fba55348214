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

#ifndef NFR_TRAINING_HPP
#define NFR_TRAINING_HPP

#include "nfr/beamforming.hpp"
#include "nfr/system.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace nfr
{
    // Near-field codebook: theta_u = theta_min + (u/U)(theta_max - theta_min),
    // alpha_s = (s/S) alpha_max with alpha_max = 1 / (2 rho_min).
    struct codebook
    {
        std::vector<double> angles;
        std::vector<double> rings;
        double theta_min = -1.0;
        double theta_max = 1.0;
        double alpha_max = 0.0;

        int n_angles() const { return int(angles.size()); }
        int n_rings() const { return int(rings.size()); }
    };

    codebook build_codebook(double theta_min, double theta_max, double rho_min, int n_angles, int n_rings);

    // Pilot transmission settings shared by all training schemes
    struct pilot_settings
    {
        double pilot_power = 1.0;     // P_t [W]
        double noise_variance = 0.0;  // sigma^2 [W]
        std::uint64_t seed = 0;
        std::optional<int> max_slots; // truncate the protocol after this many slots
    };

    // Received pilots y_{m,t} = sqrt(P_t) h_m^T w_m x_m + n_m with x_m = 1
    struct measurement_slot
    {
        int slot_index = 0;
        std::optional<delay_params> params;
        std::vector<cdouble> received;
        double pilot_power = 1.0;
        double noise_variance = 0.0;
    };

    // Noise is CN(0, sigma^2), independent across subcarriers, drawn from a
    // generator seeded with `seed`; equal seeds give identical output.
    measurement_slot simulate_measurement(const system_config &cfg, const polar_location &loc, const weight_set &ws,
                                          double pilot_power, double noise_variance, std::uint64_t seed,
                                          int slot_index = 0);

    enum class training_scheme
    {
        exhaustive,
        rainbow,
        far_field_rainbow
    };

    std::string_view to_string(training_scheme s);
    std::optional<training_scheme> parse_training_scheme(std::string_view name);

    // Per-slot summary kept by the training schemes
    struct slot_record
    {
        int slot_index = 0;
        delay_params params;
        double metric = 0.0;     // sum_m |y|^2 (exhaustive) or max_m |f_m y|^2 (rainbow)
        int best_subcarrier = 0; // argmax subcarrier of this slot (rainbow only)
        double theta_estimate = 0.0;
        double alpha_estimate = 0.0;
    };

    struct training_outcome
    {
        training_scheme scheme = training_scheme::rainbow;
        double theta_hat = 0.0;
        double alpha_hat = 0.0;
        std::optional<double> r_hat; // absent when alpha_hat = 0
        int overhead = 0;            // pilot slots consumed
        int best_slot = 0;           // t_hat
        int best_subcarrier = 0;     // m_hat (rainbow schemes), 0 otherwise
        int best_angle_index = -1;   // u (exhaustive)
        int best_ring_index = -1;    // s (exhaustive)
        std::optional<double> theta_prime; // rainbow schemes
        int alias_p = 0;                   // rainbow schemes
        std::vector<slot_record> slots;

        // Estimate available after the first `n_slots` slots (running best)
        const slot_record &best_after(int n_slots) const;
    };

    struct rainbow_peak
    {
        int subcarrier = 0;  // m maximizing |f_m y_m|^2
        double metric = 0.0; // that maximum
    };

    // Per-slot peak of the frequency-weighted received power. Since beta_m is
    // proportional to 1/f_m, |f_m y_m|^2 is proportional to the estimated
    // beamfocusing gain |g_m|^2; the first maximum wins ties.
    rainbow_peak select_rainbow_peak(const system_config &cfg, std::span<const cdouble> received);

    // Sweeps all U*S codewords ring by ring (t = s U + u) and keeps the one with
    // the largest received power summed over subcarriers.
    training_outcome exhaustive_training(const system_config &cfg, const polar_location &loc, const codebook &cb,
                                         const pilot_settings &pilots);

    // Rainbow training: one abnormal theta' spreads the subcarriers over the angle
    // range, one slot per distance ring; (m, t) = argmax |f_m y_{m,t}|^2.
    training_outcome rainbow_training(const system_config &cfg, const polar_location &loc, const codebook &cb,
                                      double theta_c, const pilot_settings &pilots);

    // Far-field baseline: the rainbow procedure restricted to alpha' = 0
    training_outcome far_field_rainbow_training(const system_config &cfg, const polar_location &loc, double theta_c,
                                                double theta_min, double theta_max, const pilot_settings &pilots);

} // namespace nfr

#endif
