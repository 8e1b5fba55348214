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

#include <catch2/catch_amalgamated.hpp>

#include "nfr/channel.hpp"
#include "nfr/error.hpp"
#include "nfr/system.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using Catch::Approx;
using nfr::polar_location;
using nfr::system_config;

namespace
{
    system_config cfg_60ghz(int n_antennas = 257)
    {
        system_config cfg;
        cfg.n_antennas = n_antennas;
        cfg.carrier_hz = 60e9;
        cfg.bandwidth_hz = 3e9;
        cfg.n_subcarriers = 128;
        return cfg;
    }
} // namespace

TEST_CASE("System config - validation", "[core]")
{
    system_config cfg = cfg_60ghz();
    REQUIRE_NOTHROW(cfg.validate());

    auto bad = cfg;
    bad.n_antennas = 1;
    CHECK_THROWS_AS(bad.validate(), nfr::invalid_argument);
    bad = cfg;
    bad.n_subcarriers = 0;
    CHECK_THROWS_AS(bad.validate(), nfr::invalid_argument);
    bad = cfg;
    bad.bandwidth_hz = 2.0 * cfg.carrier_hz;
    CHECK_THROWS_AS(bad.validate(), nfr::invalid_argument);
    bad = cfg;
    bad.spacing_m = -1.0;
    CHECK_THROWS_AS(bad.validate(), nfr::invalid_argument);

    bad = cfg;
    bad.pattern = nfr::radiation_pattern::cos3;
    bad.antenna_gain = 2.0;
    CHECK_THROWS_AS(bad.validate(), nfr::invalid_argument);
    bad.antenna_gain = 4.0;
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("System config - antenna index set", "[core]")
{
    auto odd = cfg_60ghz(257);
    CHECK(odd.n_first() == -128);
    CHECK(odd.n_last() == 128);

    auto even = cfg_60ghz(256);
    CHECK(even.n_first() == -128);
    CHECK(even.n_last() == 127);
    CHECK(even.n_last() - even.n_first() + 1 == 256);

    CHECK(odd.spacing() == Approx(nfr::speed_of_light / 60e9 / 2.0).epsilon(1e-15));
}

TEST_CASE("System config - frequency grid", "[core]")
{
    for (int m_count : {1, 2, 7, 2048})
    {
        auto cfg = cfg_60ghz();
        cfg.n_subcarriers = m_count;
        const double step = cfg.bandwidth_hz / m_count;
        for (int m = 1; m <= m_count; ++m)
        {
            const double f = cfg.subcarrier_hz(m);
            CHECK(f >= cfg.f_low());
            CHECK(f <= cfg.f_high());
            if (m > 1)
                CHECK(f - cfg.subcarrier_hz(m - 1) == Approx(step).epsilon(1e-9));
        }
        if (m_count % 2 == 0)
        {
            // the two central subcarriers straddle the carrier
            CHECK(cfg.eta(m_count / 2) < 1.0);
            CHECK(cfg.eta(m_count / 2 + 1) > 1.0);
        }
        else
            CHECK(cfg.eta((m_count + 1) / 2) == 1.0);
    }
}

TEST_CASE("Rayleigh distance", "[core]")
{
    // 1 m aperture at a nominal 1 cm wavelength (30 GHz)
    CHECK(nfr::rayleigh_distance(1.0, 0.01) == 200.0);

    // with the exact speed of light the value is 200.14 m
    CHECK(nfr::rayleigh_distance(1.0, nfr::speed_of_light / 30e9) == Approx(200.0).epsilon(1e-3));

    auto cfg = cfg_60ghz(256);
    CHECK(cfg.rayleigh_distance() == Approx(2.0 * cfg.aperture() * cfg.aperture() / cfg.wavelength_center()));
}

TEST_CASE("Distance ring", "[core]")
{
    const polar_location loc{10.0, 0.6};
    const auto ring = nfr::distance_ring::of(loc);
    CHECK(ring.alpha == Approx((1.0 - 0.36) / 20.0));
    CHECK(*ring.distance(0.6) == Approx(10.0));
    CHECK_FALSE(nfr::distance_ring{0.0}.distance(0.3).has_value());

    CHECK_THROWS_AS((polar_location{0.0, 0.0}.validate()), nfr::invalid_argument);
    CHECK_THROWS_AS((polar_location{1.0, 1.5}.validate()), nfr::invalid_argument);
}

TEST_CASE("Element distance - exact", "[core]")
{
    auto cfg = cfg_60ghz();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> theta(-1.0, 1.0), r(0.5, 100.0);

    for (int i = 0; i < 20; ++i)
    {
        const polar_location loc{r(rng), theta(rng)};
        CHECK(nfr::exact_element_distance(cfg, 0, loc) == loc.r_m);
    }

    // broadside symmetry
    const polar_location broadside{7.5, 0.0};
    for (int n = 1; n <= 128; ++n)
        CHECK(nfr::exact_element_distance(cfg, n, broadside) == nfr::exact_element_distance(cfg, -n, broadside));

    // Cartesian geometry oracle; frozen value 9.843901665498288 m
    cfg.spacing_m = 0.0025;
    const polar_location loc{10.0, 0.5};
    const double expected = oracle::cartesian_distance(10.0, 0.5, 128, 0.0025);
    CHECK(expected == Approx(9.843901665498288).epsilon(1e-14));
    CHECK(nfr::exact_element_distance(cfg, 128, loc) == Approx(expected).epsilon(1e-13));

    for (int i = 0; i < 50; ++i)
    {
        const polar_location l{r(rng), theta(rng)};
        const int n = int(rng() % 257) - 128;
        CHECK(nfr::exact_element_distance(cfg, n, l) == Approx(oracle::cartesian_distance(l.r_m, l.theta, n, 0.0025)).epsilon(1e-12));
    }
}

TEST_CASE("Element distance - Fresnel", "[core]")
{
    auto cfg = cfg_60ghz(256);
    const polar_location loc{10.0, 0.37};
    CHECK(nfr::fresnel_element_distance(cfg, 0, loc) == 10.0);

    const polar_location broadside{4.0, 0.0};
    const double d = cfg.spacing();
    for (int n : {-100, -3, 5, 127})
        CHECK(nfr::fresnel_element_distance(cfg, n, broadside) == Approx(4.0 + n * n * d * d / 8.0).epsilon(1e-14));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> theta(-1.0, 1.0);
    for (int i = 0; i < 20; ++i)
    {
        const polar_location l{10.0, theta(rng)};
        double worst = 0.0;
        for (int n = cfg.n_first(); n <= cfg.n_last(); ++n)
        {
            const double exact = nfr::exact_element_distance(cfg, n, l);
            worst = std::max(worst, std::abs(nfr::fresnel_element_distance(cfg, n, l) - exact) / exact);
        }
        CHECK(worst < 1e-3);
    }
}

TEST_CASE("Path gain", "[core]")
{
    auto cfg = cfg_60ghz();
    const polar_location near{5.0, 0.3}, far{10.0, 0.3};
    const int m = 17;
    CHECK(nfr::path_gain(cfg, m, near) == Approx(2.0 * nfr::path_gain(cfg, m, far)).epsilon(1e-14));

    for (int k = 2; k <= cfg.n_subcarriers; ++k)
        CHECK(nfr::path_gain(cfg, k, near) < nfr::path_gain(cfg, k - 1, near));

    // lambda_m = c / f_m
    const double lambda = nfr::speed_of_light / cfg.subcarrier_hz(m);
    CHECK(nfr::path_gain(cfg, m, near) == Approx(lambda / (4.0 * nfr::pi * 5.0)).epsilon(1e-14));

    // cos^3 normalization by quadrature: int_0^{pi/2} cos^3 sin = 1/4
    const double integral = oracle::simpson([](double v) { return std::pow(std::cos(v), 3) * std::sin(v); }, 0.0,
                                            nfr::pi / 2.0);
    CHECK(integral == Approx(0.25).epsilon(1e-10));
    CHECK(std::abs(4.0 * integral - 1.0) < 1e-9);

    cfg.pattern = nfr::radiation_pattern::cos3;
    cfg.antenna_gain = 4.0;
    const polar_location off_axis{5.0, 0.6};
    const double pattern = std::pow(std::cos(std::asin(0.6)), 3);
    CHECK(nfr::path_gain(cfg, m, off_axis) ==
          Approx(std::sqrt(4.0 * pattern) * lambda / (4.0 * nfr::pi * 5.0)).epsilon(1e-14));
    CHECK(nfr::path_gain(cfg, m, polar_location{5.0, 1.0}) == Approx(0.0).margin(1e-20));
}

TEST_CASE("Array response", "[core]")
{
    auto cfg = cfg_60ghz(256);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> theta(-1.0, 1.0), r(0.5, 200.0);
    std::uniform_int_distribution<int> sub(1, cfg.n_subcarriers);

    SECTION("unit norm in both modes")
    {
        for (int i = 0; i < 50; ++i)
        {
            const polar_location loc{r(rng), theta(rng)};
            const int m = sub(rng);
            CHECK(std::abs(nfr::array_response(cfg, m, loc, nfr::response_mode::exact).norm() - 1.0) < 1e-12);
            CHECK(std::abs(nfr::array_response(cfg, m, loc, nfr::response_mode::fresnel).norm() - 1.0) < 1e-12);
        }
    }

    SECTION("Fresnel centre element")
    {
        const auto b = nfr::array_response(cfg, 3, {10.0, 0.4}, nfr::response_mode::fresnel);
        const auto centre = b.entries[std::size_t(-cfg.n_first())];
        CHECK(centre.real() == Approx(1.0 / std::sqrt(256.0)).epsilon(1e-15));
        CHECK(centre.imag() == Approx(0.0).margin(1e-15));
    }

    SECTION("Fresnel fidelity")
    {
        auto fidelity = [&](const polar_location &loc, int m)
        {
            const auto exact = nfr::array_response(cfg, m, loc, nfr::response_mode::exact);
            auto fres = nfr::array_response(cfg, m, loc, nfr::response_mode::fresnel);
            const nfr::cdouble residue = std::polar(1.0, -cfg.wavenumber(m) * loc.r_m);
            nfr::cdouble acc{};
            for (std::size_t i = 0; i < exact.size(); ++i)
                acc += std::conj(exact.entries[i]) * fres.entries[i] * residue;
            return std::abs(acc);
        };

        for (int i = 0; i < 20; ++i)
            CHECK(fidelity({10.0, theta(rng)}, sub(rng)) > 0.999);

        // validity regime r >= D
        std::uniform_real_distribution<double> beyond(cfg.aperture(), 100.0);
        for (int i = 0; i < 50; ++i)
            CHECK(fidelity({beyond(rng), theta(rng)}, sub(rng)) >= 0.99);
    }
}

TEST_CASE("Channel vector", "[core]")
{
    auto cfg = cfg_60ghz();
    const polar_location loc{12.0, -0.45};
    const int m = 40;
    const auto h = nfr::channel(cfg, m, loc);
    const double beta = nfr::path_gain(cfg, m, loc);

    double norm2 = 0.0;
    for (const auto &v : h)
        norm2 += std::norm(v);
    CHECK(std::sqrt(norm2) == Approx(std::sqrt(double(cfg.n_antennas)) * beta).epsilon(1e-12));

    // matched filter conj(a_m) attains sqrt(N_t) beta_m
    const auto a = nfr::array_response(cfg, m, loc);
    nfr::cdouble acc{};
    for (std::size_t i = 0; i < h.size(); ++i)
        acc += h[i] * std::conj(a.entries[i]);
    CHECK(std::abs(acc) == Approx(std::sqrt(double(cfg.n_antennas)) * beta).epsilon(1e-12));

    // phase of the centre element is -k_m r_0 (mod 2 pi)
    const auto centre = h[std::size_t(-cfg.n_first())];
    const double expected = std::remainder(-cfg.wavenumber(m) * loc.r_m, 2.0 * nfr::pi);
    CHECK(std::remainder(std::arg(centre) - expected, 2.0 * nfr::pi) == Approx(0.0).margin(1e-9));

    // Fresnel mode differs from the exact channel only by the approximation error
    const auto hf = nfr::channel(cfg, m, loc, nfr::response_mode::fresnel);
    nfr::cdouble cross{};
    for (std::size_t i = 0; i < h.size(); ++i)
        cross += std::conj(h[i]) * hf[i];
    CHECK(std::abs(cross) / norm2 > 0.999);
}

TEST_CASE("Phase-ramp summation matches direct evaluation", "[core]")
{
    auto cfg = cfg_60ghz(64);
    cfg.n_subcarriers = 300;
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> path(-3.0, 30.0), amp(-1.0, 1.0);

    std::vector<nfr::cdouble> a(64);
    std::vector<double> p(64);
    for (std::size_t i = 0; i < 64; ++i)
    {
        a[i] = {amp(rng), amp(rng)};
        p[i] = path(rng);
    }
    const auto fast = nfr::sum_phase_ramps(cfg, a, p);
    for (int m = 1; m <= cfg.n_subcarriers; ++m)
    {
        nfr::cdouble direct{};
        for (std::size_t i = 0; i < 64; ++i)
            direct += a[i] * std::polar(1.0, -cfg.wavenumber(m) * p[i]);
        CHECK(std::abs(fast[std::size_t(m - 1)] - direct) < 1e-9);
    }
}
