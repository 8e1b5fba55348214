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

#include "nfr/system.hpp"
#include "nfr/error.hpp"

#include <cmath>
#include <string>

namespace nfr
{
    void system_config::validate() const
    {
        require(n_antennas >= 2, "n_antennas must be at least 2");
        require(n_subcarriers >= 1, "n_subcarriers must be at least 1");
        require(std::isfinite(carrier_hz) && carrier_hz > 0.0, "carrier_hz must be positive");
        require(std::isfinite(bandwidth_hz) && bandwidth_hz >= 0.0, "bandwidth_hz must be non-negative");
        require(bandwidth_hz < 2.0 * carrier_hz, "bandwidth_hz must be below twice the carrier");
        require(std::isfinite(spacing()) && spacing() > 0.0, "spacing_m must be positive");
        require(std::isfinite(antenna_gain) && antenna_gain > 0.0, "antenna_gain must be positive");
        if (pattern == radiation_pattern::cos3)
            // G_t * int_0^{pi/2} cos^3(v) sin(v) dv = G_t / 4
            require(std::abs(antenna_gain / 4.0 - 1.0) < 1e-9, "cos3 pattern requires antenna_gain = 4");
    }

    double system_config::rayleigh_distance() const
    {
        return nfr::rayleigh_distance(aperture(), wavelength_center());
    }

    double system_config::subcarrier_hz(int m) const
    {
        const double offset = double(m - 1) - double(n_subcarriers - 1) / 2.0;
        return carrier_hz + subcarrier_step_hz() * offset;
    }

    double system_config::wavenumber(int m) const
    {
        return 2.0 * pi * subcarrier_hz(m) / speed_of_light;
    }

    double system_config::wavenumber_center() const
    {
        return 2.0 * pi * carrier_hz / speed_of_light;
    }

    double system_config::eta(int m) const
    {
        return subcarrier_hz(m) / carrier_hz;
    }

    double system_config::pattern_value(double vartheta) const
    {
        switch (pattern)
        {
        case radiation_pattern::isotropic:
            return 1.0;
        case radiation_pattern::cos3:
        {
            if (std::abs(vartheta) > pi / 2.0)
                return 0.0;
            const double c = std::cos(vartheta);
            return c * c * c;
        }
        }
        return 0.0;
    }

    system_config system_config::reference()
    {
        system_config cfg;
        cfg.n_antennas = 256;
        cfg.carrier_hz = 60.0e9;
        cfg.bandwidth_hz = 3.0e9;
        cfg.n_subcarriers = 2048;
        cfg.antenna_gain = 4.0;
        cfg.pattern = radiation_pattern::cos3;
        return cfg;
    }

    double rayleigh_distance(double aperture_m, double wavelength_m)
    {
        return 2.0 * aperture_m * aperture_m / wavelength_m;
    }

    void polar_location::validate() const
    {
        require(std::isfinite(r_m) && r_m > 0.0, "location distance must be positive, got " + std::to_string(r_m));
        require(std::isfinite(theta) && theta >= -1.0 && theta <= 1.0,
                "location angle must lie in [-1, 1], got " + std::to_string(theta));
    }

    distance_ring distance_ring::of(const polar_location &loc)
    {
        return {(1.0 - loc.theta * loc.theta) / (2.0 * loc.r_m)};
    }

    std::optional<double> distance_ring::distance(double theta) const
    {
        if (alpha == 0.0)
            return std::nullopt;
        return (1.0 - theta * theta) / (2.0 * alpha);
    }

    double subcarrier_vector::norm() const
    {
        double acc = 0.0;
        for (const auto &v : entries)
            acc += std::norm(v);
        return std::sqrt(acc);
    }

    cdouble transpose_product(const subcarrier_vector &a, const subcarrier_vector &b)
    {
        require(a.size() == b.size(), "vector sizes differ");
        cdouble acc{0.0, 0.0};
        for (std::size_t i = 0; i < a.size(); ++i)
            acc += a.entries[i] * b.entries[i];
        return acc;
    }

} // namespace nfr
