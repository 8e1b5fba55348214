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

// Acceptance suite. Usage: acceptance [A1 ... A10]; no argument runs every
// criterion. Prints one "<id> PASS|FAIL <detail>" line per criterion and exits
// non-zero when any criterion fails.

#include "nfr/beamforming.hpp"
#include "nfr/evaluation.hpp"
#include "nfr/split_analysis.hpp"
#include "nfr/training.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    using nfr::delay_params;
    using nfr::polar_location;
    using nfr::system_config;

    const double sin60 = std::sin(nfr::pi / 3.0);

    // Tolerances
    constexpr double a1_runtime_limit_ms = 1.0;
    constexpr double a2_tolerance = 1e-9;
    constexpr double a3_tolerance = 1e-9;
    constexpr double a5_target = 0.5, a5_band = 0.1;
    constexpr double a6_inner = 0.19, a6_outer = 0.25;
    constexpr double a7_min_ratio = 0.93;

    struct verdict
    {
        bool pass = false;
        std::string detail;
    };

    std::string fmt(const char *format, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, format, args...);
        return buf;
    }

    system_config make_cfg(int n_antennas, double carrier_hz, double bandwidth_hz, int n_subcarriers)
    {
        system_config cfg;
        cfg.n_antennas = n_antennas;
        cfg.carrier_hz = carrier_hz;
        cfg.bandwidth_hz = bandwidth_hz;
        cfg.n_subcarriers = n_subcarriers;
        return cfg;
    }

    verdict a1()
    {
        const auto start = std::chrono::steady_clock::now();
        const auto design = nfr::design_theta_prime(0.0, -sin60, sin60, 60e9, 3e9);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const bool pass = design.theta_prime == -36.0 && design.p == 18 && ms < a1_runtime_limit_ms;
        return {pass, fmt("theta'=%g p=%d runtime=%.4f ms", design.theta_prime, design.p, ms)};
    }

    verdict a2()
    {
        const auto cfg = make_cfg(257, 60e9, 3e9, 1);
        const double d = cfg.spacing();
        const double px = 2.0 * nfr::pi / d, py = 2.0 * nfr::pi / (d * d);
        std::mt19937_64 rng(2);
        std::uniform_real_distribution<double> unit(-0.5, 0.5);
        std::uniform_int_distribution<int> shift(-3, 3);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            const double x = unit(rng) * px, y = unit(rng) * py;
            const int p = shift(rng), q = shift(rng);
            worst = std::max(worst, std::abs(nfr::gain_kernel(cfg, x, y) - nfr::gain_kernel(cfg, x - p * px, y - q * py)));
        }
        return {worst < a2_tolerance, fmt("N_t=257, 100 samples, max |dG| = %.3e (limit %.0e)", worst, a2_tolerance)};
    }

    verdict a3()
    {
        double worst = 0.0;
        for (int n : {256, 257})
        {
            const auto cfg = make_cfg(n, 60e9, 3e9, 1);
            const double period = 2.0 * nfr::pi / cfg.spacing();
            for (int i = 0; i < 10000; ++i)
            {
                const double x = period * i / 10000.0;
                worst = std::max(worst, std::abs(nfr::far_field_gain(cfg, x) - nfr::gain_kernel(cfg, x, 0.0)));
            }
        }
        return {worst < a3_tolerance, fmt("N_t in {256,257}, 10^4 points per period, max error %.3e", worst)};
    }

    // Targets sit on angle nodes of the search grid: with an even N_t the array's
    // phase centre is half an element off n = 0, which couples angle and ring so an
    // off-node angle would move the ring argmax by more than the cell tolerance.
    verdict a4()
    {
        const auto cfg = make_cfg(64, 60e9, 3e9, 2048);
        const nfr::focus_grid grid;
        const double d = cfg.spacing();
        std::mt19937_64 rng(4);
        std::uniform_int_distribution<int> node(154, 1894); // |theta| <= 0.85
        std::uniform_int_distribution<int> sub(1, cfg.n_subcarriers), alias(-3, 3);
        std::uniform_real_distribution<double> ring(0.005, 0.16);

        int agree = 0, total = 0;
        double worst_t = 0.0, worst_a = 0.0;
        auto compare = [&](const nfr::weight_set &ws, int m, double theta, double alpha)
        {
            const auto peak = nfr::brute_force_focus(cfg, ws, m, grid);
            const double dt = std::abs(peak.theta - theta) / grid.theta_step();
            const double da = std::abs(peak.alpha - alpha) / grid.alpha_step();
            worst_t = std::max(worst_t, dt);
            worst_a = std::max(worst_a, da);
            ++total;
            if (dt <= 1.0 + 1e-9 && da <= 1.0 + 1e-9)
                ++agree;
        };

        for (int i = 0; i < 50; ++i)
        {
            const int m = sub(rng);
            const double eta = cfg.eta(m);
            const double theta_m = grid.theta_at(node(rng)), alpha_m = ring(rng);
            const polar_location focus{(1.0 - theta_m * theta_m * eta * eta) / (2.0 * alpha_m * eta), theta_m * eta};
            const auto fp = nfr::lemma1_focus(cfg, m, focus);
            compare(nfr::ps_weights(cfg, focus), m, fp.theta, fp.alpha);
        }
        for (int i = 0; i < 50; ++i)
        {
            const int m = sub(rng);
            const double eta = cfg.eta(m);
            const double theta_m = grid.theta_at(node(rng)), alpha_m = ring(rng);
            int p = 0, q = 0;
            if (i % 2 == 1) // abnormal
                while (p == 0 && q == 0)
                {
                    p = alias(rng);
                    q = alias(rng);
                }
            const delay_params dp{theta_m - 2.0 * p / eta, alpha_m - 2.0 * q / (d * eta)};
            const auto fp = nfr::lemma2_focus(cfg, m, dp);
            compare(nfr::td_weights(cfg, dp), m, fp.theta, fp.alpha);
        }
        return {agree == total, fmt("%d/%d loci within one cell (worst %.2f angle cells, %.2f ring cells)", agree,
                                    total, worst_t, worst_a)};
    }

    verdict a5()
    {
        const auto cfg = make_cfg(256, 30e9, 1e9, 2048);
        const polar_location focus{10.0, 0.8};
        const double alpha0 = nfr::distance_ring::of(focus).alpha;
        const auto ws = nfr::ps_weights(cfg, focus);
        int lossy = 0;
        for (int m = 1; m <= cfg.n_subcarriers; ++m)
            if (nfr::gain_at(cfg, ws, m, focus.theta, alpha0) < 0.5)
                ++lossy;
        const double fraction = double(lossy) / cfg.n_subcarriers;
        return {std::abs(fraction - a5_target) <= a5_band,
                fmt("fraction of subcarriers with gain < 0.5: %.4f (target %.2f +- %.2f)", fraction, a5_target, a5_band)};
    }

    verdict a6()
    {
        const auto cfg = make_cfg(256, 60e9, 3e9, 2048);
        const delay_params dp{-6.0, 1.0 / 20.0};
        const auto ws = nfr::td_weights(cfg, dp);
        const nfr::focus_grid grid;
        // the locus is monotone in frequency, so the band edges bound the span
        std::vector<int> subcarriers;
        for (int i = 0; i <= 16; ++i)
            subcarriers.push_back(1 + int(std::lround(i * (cfg.n_subcarriers - 1) / 16.0)));
        double lo = 1.0, hi = -1.0;
        for (int m : subcarriers)
        {
            const auto peak = nfr::brute_force_focus(cfg, ws, m, grid);
            lo = std::min(lo, peak.theta);
            hi = std::max(hi, peak.theta);
        }
        const double pred_lo = nfr::lemma2_focus(cfg, cfg.n_subcarriers, dp).theta;
        const double pred_hi = nfr::lemma2_focus(cfg, 1, dp).theta;
        const bool pass = lo <= -a6_inner && hi >= a6_inner && lo >= -a6_outer && hi <= a6_outer;
        return {pass, fmt("peak angles span [%.4f, %.4f] over %zu subcarriers (analytic locus [%.4f, %.4f])", lo, hi,
                          subcarriers.size(), pred_lo, pred_hi)};
    }

    verdict a7()
    {
        nfr::scenario sc;
        sc.axis = nfr::sweep_axis::overhead;
        sc.axis_values = {8.0, 10.0};
        sc.snr_db = 10.0;
        sc.trials = 100;
        sc.strategies = {nfr::strategy::perfect_csi, nfr::strategy::rainbow};
        const auto report = nfr::run_scenario(sc);
        const double perfect = report.at(nfr::strategy::perfect_csi, 10.0).mean_rate;
        const double rainbow = report.at(nfr::strategy::rainbow, 10.0).mean_rate;
        const double at8 = report.at(nfr::strategy::rainbow, 8.0).mean_rate;
        const double ratio = rainbow / perfect;
        return {ratio >= a7_min_ratio, fmt("rainbow %.4f / perfect CSI %.4f = %.1f%% at overhead 10 (%.1f%% at 8; "
                                           "need >= %.0f%%)",
                                           rainbow, perfect, 100.0 * ratio, 100.0 * at8 / perfect, 100.0 * a7_min_ratio)};
    }

    verdict a8()
    {
        const auto cfg = make_cfg(16, 60e9, 3e9, 8);
        const auto cb = nfr::build_codebook(-sin60, sin60, 3.0, 256, 10);
        const polar_location user{10.0, 0.3};
        const auto ex = nfr::exhaustive_training(cfg, user, cb, {});
        const auto rb = nfr::rainbow_training(cfg, user, cb, 0.0, {});
        const auto ff = nfr::far_field_rainbow_training(cfg, user, 0.0, -sin60, sin60, {});
        const bool pass = ex.overhead == 2560 && ex.slots.size() == 2560 && rb.overhead == 10 &&
                          rb.slots.size() == 10 && ff.overhead == 1 && ff.slots.size() == 1;
        return {pass, fmt("exhaustive %d, rainbow %d, far-field rainbow %d slots", ex.overhead, rb.overhead,
                          ff.overhead)};
    }

    verdict a9()
    {
        const auto cfg = make_cfg(64, 60e9, 3e9, 16);
        const auto cb = nfr::build_codebook(-sin60, sin60, 3.0, 64, 5);
        constexpr double far_field_r = 1e6; // stands in for alpha = 0
        int recovered = 0, total = 0;
        std::string first_miss;
        for (int s = 0; s < cb.n_rings(); ++s)
            for (int u = 0; u < cb.n_angles(); ++u)
            {
                const double theta = cb.angles[std::size_t(u)], alpha = cb.rings[std::size_t(s)];
                const polar_location user{s == 0 ? far_field_r : (1.0 - theta * theta) / (2.0 * alpha), theta};
                const auto out = nfr::exhaustive_training(cfg, user, cb, {});
                ++total;
                if (out.best_angle_index == u && out.best_ring_index == s)
                    ++recovered;
                else if (first_miss.empty())
                    first_miss = fmt(" (first miss u=%d s=%d -> u=%d s=%d)", u, s, out.best_angle_index,
                                     out.best_ring_index);
            }
        return {recovered == total, fmt("%d/%d codewords recovered", recovered, total) + first_miss};
    }

    verdict a10()
    {
        const auto cfg = system_config::reference();
        const double rd = cfg.rayleigh_distance();
        const auto cb = nfr::build_codebook(-sin60, sin60, 3.0, 256, 1);
        const auto design = nfr::design_theta_prime(0.0, -sin60, sin60, cfg.carrier_hz, cfg.bandwidth_hz);
        const double step = 2.0 * design.p * cfg.carrier_hz *
                            (1.0 / cfg.subcarrier_hz(1) - 1.0 / cfg.subcarrier_hz(2)); // largest locus step
        std::mt19937_64 rng(10);
        std::uniform_real_distribution<double> theta(-sin60, sin60), r(2.0 * rd, 10.0 * rd);
        int agree = 0;
        double worst = 0.0;
        for (int i = 0; i < 50; ++i)
        {
            const polar_location user{r(rng), theta(rng)};
            const auto rb = nfr::rainbow_training(cfg, user, cb, 0.0, {});
            const auto ff = nfr::far_field_rainbow_training(cfg, user, 0.0, -sin60, sin60, {});
            const double gap = std::abs(rb.theta_hat - ff.theta_hat);
            worst = std::max(worst, gap);
            if (gap <= step && rb.alpha_hat == 0.0)
                ++agree;
        }
        return {agree == 50, fmt("%d/50 users at r >= 2 RD (RD = %.1f m) agree; max |dtheta| = %.3e, step %.3e", agree,
                                 rd, worst, step)};
    }
} // namespace

int main(int argc, char **argv)
{
    const std::vector<std::pair<std::string, std::function<verdict()>>> criteria = {
        {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
        {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}};

    std::vector<std::string> wanted(argv + 1, argv + argc);
    for (const auto &w : wanted)
        if (std::none_of(criteria.begin(), criteria.end(), [&](const auto &c) { return c.first == w; }))
        {
            std::fprintf(stderr, "unknown criterion '%s'\n", w.c_str());
            return 2;
        }

    int failures = 0;
    for (const auto &[id, check] : criteria)
    {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), id) == wanted.end())
            continue;
        verdict v;
        try
        {
            v = check();
        }
        catch (const std::exception &e)
        {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s %s\n", id.c_str(), v.pass ? "PASS" : "FAIL", v.detail.c_str());
        std::fflush(stdout);
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
