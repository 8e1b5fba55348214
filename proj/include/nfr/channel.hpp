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

#ifndef NFR_CHANNEL_HPP
#define NFR_CHANNEL_HPP

#include "nfr/system.hpp"

#include <span>
#include <vector>

namespace nfr
{
    enum class response_mode
    {
        exact,  // spherical wavefront, e^{-j k_m r^(n)} / sqrt(N_t)
        fresnel // b_m(theta, alpha), residue phase e^{-j k_m r} dropped
    };

    // Exact distance between antenna n at (0, n d) and the user
    double exact_element_distance(const system_config &cfg, int n, const polar_location &loc);

    // Second-order expansion r - n d theta + n^2 d^2 alpha
    double fresnel_element_distance(const system_config &cfg, int n, const polar_location &loc);

    // Free-space gain beta_m with the pattern taken at the array centre
    double path_gain(const system_config &cfg, int m, const polar_location &loc);

    // Same at the carrier frequency (lambda = lambda_c); used as SNR reference
    double path_gain_center(const system_config &cfg, const polar_location &loc);

    subcarrier_vector array_response(const system_config &cfg, int m, const polar_location &loc,
                                     response_mode mode = response_mode::exact);

    // b_m(theta, alpha) for an arbitrary (theta, alpha) pair, no physical check
    subcarrier_vector fresnel_response(const system_config &cfg, int m, double theta, double alpha);

    // h_m = sqrt(N_t) beta_m a_m(theta_0, r_0)
    std::vector<cdouble> channel(const system_config &cfg, int m, const polar_location &loc,
                                 response_mode mode = response_mode::exact);

    // Exact distances r^(n) for all antennas, ordered by n
    std::vector<double> element_distances(const system_config &cfg, const polar_location &loc);

    // Evaluates s_m = sum_n amplitude[n] * exp(-j k_m path[n]) for m = 1..M.
    // Phases advance by a per-antenna rotator between consecutive subcarriers and are
    // re-seeded from the exact value periodically to bound accumulated rounding.
    std::vector<cdouble> sum_phase_ramps(const system_config &cfg, std::span<const cdouble> amplitude,
                                         std::span<const double> path);

} // namespace nfr

#endif
