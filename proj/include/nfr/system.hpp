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

#ifndef NFR_SYSTEM_HPP
#define NFR_SYSTEM_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace nfr
{
    using cdouble = std::complex<double>;

    inline constexpr double speed_of_light = 299792458.0; // [m/s]
    inline constexpr double pi = 3.14159265358979323846;

    enum class radiation_pattern
    {
        isotropic, // F(v) = 1
        cos3       // F(v) = cos^3(v) for |v| <= pi/2
    };

    // Global description of the base-station array and the OFDM frequency plan.
    //
    // Antenna indices are integers n in [n_first(), n_last()]. For odd N_t the set
    // is symmetric {-N, ..., N}; for even N_t it is {-N_t/2, ..., N_t/2 - 1}.
    // Subcarrier indices m are 1-based, m = 1 .. M.
    struct system_config
    {
        int n_antennas = 257;                // N_t
        double carrier_hz = 60.0e9;          // f_c
        double bandwidth_hz = 3.0e9;         // B
        int n_subcarriers = 2048;            // M
        std::optional<double> spacing_m;     // d, defaults to lambda_c / 2
        double antenna_gain = 1.0;           // G_t
        radiation_pattern pattern = radiation_pattern::isotropic;

        // Throws nfr::invalid_argument on violated invariants
        void validate() const;

        double spacing() const { return spacing_m ? *spacing_m : wavelength_center() / 2.0; }
        double wavelength_center() const { return speed_of_light / carrier_hz; }
        double aperture() const { return n_antennas * spacing(); }
        double rayleigh_distance() const;

        int n_first() const { return -(n_antennas / 2); }
        int n_last() const { return n_first() + n_antennas - 1; }

        double subcarrier_hz(int m) const;        // f_m
        double wavenumber(int m) const;           // k_m = 2 pi f_m / c
        double wavenumber_center() const;         // k_c
        double eta(int m) const;                  // f_m / f_c
        double subcarrier_step_hz() const { return bandwidth_hz / n_subcarriers; }
        double f_low() const { return carrier_hz - bandwidth_hz / 2.0; }
        double f_high() const { return carrier_hz + bandwidth_hz / 2.0; }

        // Normalized power pattern F at physical angle vartheta [rad]
        double pattern_value(double vartheta) const;

        // Paper-reproduction defaults: N_t = 256, 60 GHz, 3 GHz, 2048 subcarriers, cos^3 with G_t = 4
        static system_config reference();
    };

    // Rayleigh distance 2 D^2 / lambda for aperture D [m] and wavelength [m]
    double rayleigh_distance(double aperture_m, double wavelength_m);

    // User position in polar coordinates: r [m], theta = sin(vartheta)
    struct polar_location
    {
        double r_m = 1.0;
        double theta = 0.0;

        void validate() const;
    };

    // alpha = (1 - theta^2) / (2 r) [1/m]; alpha = 0 is the far-field limit
    struct distance_ring
    {
        double alpha = 0.0;

        static distance_ring of(const polar_location &loc);

        // r = (1 - theta^2) / (2 alpha); empty for alpha == 0
        std::optional<double> distance(double theta) const;
    };

    // Complex amplitudes over the antenna indices at one subcarrier.
    // entries[i] belongs to antenna n = n_first + i.
    struct subcarrier_vector
    {
        std::vector<cdouble> entries;
        int subcarrier = 1;

        double norm() const;
        std::size_t size() const { return entries.size(); }
    };

    // sum_i a[i] * b[i] (plain transpose, no conjugation)
    cdouble transpose_product(const subcarrier_vector &a, const subcarrier_vector &b);

} // namespace nfr

#endif
