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

#ifndef NFR_BEAMFORMING_HPP
#define NFR_BEAMFORMING_HPP

#include "nfr/channel.hpp"
#include "nfr/system.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace nfr
{
    // Adjustable parameters of a time-delay beamformer. The per-antenna adjustable
    // distance is r'^(n) = n d theta' - n^2 d^2 alpha'. Both values may lie outside the
    // physical range ("abnormal"), which is what produces a controlled beam split.
    struct delay_params
    {
        double theta_prime = 0.0;
        double alpha_prime = 0.0;

        bool is_actual() const { return theta_prime >= -1.0 && theta_prime <= 1.0 && alpha_prime >= 0.0; }
    };

    enum class weight_kind
    {
        phase_shifter,  // one frequency-flat vector
        time_delay,     // w_m(theta', alpha'), frequency dependent
        per_subcarrier  // arbitrary vector per subcarrier (perfect-CSI benchmark)
    };

    // Analog beamforming weights for all M subcarriers. Immutable once built.
    class weight_set
    {
    public:
        static weight_set phase_shifter(const system_config &cfg, subcarrier_vector w);
        static weight_set time_delay(const system_config &cfg, delay_params dp);
        static weight_set per_subcarrier(const system_config &cfg, std::vector<subcarrier_vector> w);

        weight_kind kind() const { return kind_; }
        int n_subcarriers() const { return cfg_.n_subcarriers; }
        const system_config &config() const { return cfg_; }

        // Delay parameters of a time-delay set
        std::optional<delay_params> delay() const;

        // Weight vector applied at subcarrier m (1-based)
        subcarrier_vector vector(int m) const;

    private:
        weight_set(const system_config &cfg, weight_kind kind) : cfg_(cfg), kind_(kind) {}

        system_config cfg_;
        weight_kind kind_;
        delay_params dp_{};
        std::shared_ptr<const std::vector<subcarrier_vector>> vectors_;
    };

    // w_PS = conj(b_c(theta_0, alpha_0)), replicated on every subcarrier
    weight_set ps_weights(const system_config &cfg, const polar_location &focus);

    // [w_m]_n = exp(-j k_m (n d theta' - n^2 d^2 alpha')) / sqrt(N_t)
    weight_set td_weights(const system_config &cfg, const delay_params &dp);

    // G(x, y) = |sum_n exp(j n d x - j n^2 d^2 y)| / N_t
    double gain_kernel(const system_config &cfg, double x, double y);

    // G(x, 0) = |sin(N_t d x / 2) / (N_t sin(d x / 2))|
    double far_field_gain(const system_config &cfg, double x);

    // |w_m^T b_m(theta, alpha)| by direct inner product
    double gain_at(const system_config &cfg, const weight_set &ws, int m, double theta, double alpha,
                   response_mode mode = response_mode::fresnel);

    // a_m^T(theta_0, r_0) w_m for every subcarrier, exact spherical response
    std::vector<cdouble> response_gains(const system_config &cfg, const polar_location &loc, const weight_set &ws);

} // namespace nfr

#endif
