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

#include "nfr/training.hpp"
#include "nfr/channel.hpp"
#include "nfr/error.hpp"
#include "nfr/seeding.hpp"
#include "nfr/split_analysis.hpp"

#include <cmath>
#include <random>

namespace nfr
{
    codebook build_codebook(double theta_min, double theta_max, double rho_min, int n_angles, int n_rings)
    {
        require(n_angles >= 1 && n_rings >= 1, "codebook needs U >= 1 and S >= 1");
        require(rho_min > 0.0, "rho_min must be positive");
        require(theta_min < theta_max, "codebook needs theta_min < theta_max");

        codebook cb;
        cb.theta_min = theta_min;
        cb.theta_max = theta_max;
        cb.alpha_max = 1.0 / (2.0 * rho_min);
        cb.angles.resize(std::size_t(n_angles));
        for (int u = 0; u < n_angles; ++u)
            cb.angles[std::size_t(u)] = theta_min + double(u) / n_angles * (theta_max - theta_min);
        cb.rings.resize(std::size_t(n_rings));
        for (int s = 0; s < n_rings; ++s)
            cb.rings[std::size_t(s)] = double(s) / n_rings * cb.alpha_max;
        return cb;
    }

    measurement_slot simulate_measurement(const system_config &cfg, const polar_location &loc, const weight_set &ws,
                                          double pilot_power, double noise_variance, std::uint64_t seed, int slot_index)
    {
        require(pilot_power > 0.0, "pilot power must be positive");
        require(noise_variance >= 0.0, "noise variance must be non-negative");

        measurement_slot slot;
        slot.slot_index = slot_index;
        slot.params = ws.delay();
        slot.pilot_power = pilot_power;
        slot.noise_variance = noise_variance;
        slot.received = response_gains(cfg, loc, ws);

        const double amplitude = std::sqrt(pilot_power * cfg.n_antennas);
        for (int m = 1; m <= cfg.n_subcarriers; ++m)
            slot.received[std::size_t(m - 1)] *= amplitude * path_gain(cfg, m, loc);

        if (noise_variance > 0.0)
        {
            std::mt19937_64 rng(seed);
            std::normal_distribution<double> normal(0.0, std::sqrt(noise_variance / 2.0));
            for (auto &y : slot.received)
            {
                const double re = normal(rng);
                const double im = normal(rng);
                y += cdouble(re, im);
            }
        }
        return slot;
    }

    std::string_view to_string(training_scheme s)
    {
        switch (s)
        {
        case training_scheme::exhaustive:
            return "exhaustive";
        case training_scheme::rainbow:
            return "rainbow";
        case training_scheme::far_field_rainbow:
            return "farfield_rainbow";
        }
        return "unknown";
    }

    std::optional<training_scheme> parse_training_scheme(std::string_view name)
    {
        for (auto s : {training_scheme::exhaustive, training_scheme::rainbow, training_scheme::far_field_rainbow})
            if (name == to_string(s))
                return s;
        return std::nullopt;
    }

    const slot_record &training_outcome::best_after(int n_slots) const
    {
        require(n_slots >= 1 && n_slots <= int(slots.size()), "running-best query outside the measured slots");
        std::size_t best = 0;
        for (std::size_t t = 1; t < std::size_t(n_slots); ++t)
            if (slots[t].metric > slots[best].metric)
                best = t;
        return slots[best];
    }

    namespace
    {
        int slot_budget(int native, const pilot_settings &pilots)
        {
            if (!pilots.max_slots)
                return native;
            require(*pilots.max_slots >= 1, "max_slots must be at least 1");
            return std::min(native, *pilots.max_slots);
        }

        void finish(training_outcome &out)
        {
            out.overhead = int(out.slots.size());
            const auto &best = out.best_after(out.overhead);
            out.best_slot = best.slot_index;
            out.theta_hat = best.theta_estimate;
            out.alpha_hat = best.alpha_estimate;
            out.r_hat = distance_ring{out.alpha_hat}.distance(out.theta_hat);
        }

        training_outcome rainbow_core(const system_config &cfg, const polar_location &loc, training_scheme scheme,
                                      double theta_c, double theta_min, double theta_max,
                                      const std::vector<double> &rings, const pilot_settings &pilots)
        {
            const auto design = design_theta_prime(theta_c, theta_min, theta_max, cfg.carrier_hz, cfg.bandwidth_hz);

            training_outcome out;
            out.scheme = scheme;
            out.theta_prime = design.theta_prime;
            out.alias_p = design.p;

            const int n_slots = slot_budget(int(rings.size()), pilots);
            for (int t = 0; t < n_slots; ++t)
            {
                const delay_params dp{design.theta_prime, rings[std::size_t(t)]};
                const auto slot = simulate_measurement(cfg, loc, td_weights(cfg, dp), pilots.pilot_power,
                                                       pilots.noise_variance, derive_seed(pilots.seed, std::uint64_t(t)), t);

                const auto peak = select_rainbow_peak(cfg, slot.received);
                slot_record rec{t, dp, peak.metric, peak.subcarrier, 0.0, dp.alpha_prime};

                const double f_hat = cfg.subcarrier_hz(rec.best_subcarrier);
                rec.theta_estimate = design.theta_prime + (theta_c - design.theta_prime) * cfg.carrier_hz / f_hat;
                if (std::abs(rec.theta_estimate) > 1.0) // locus left the visible region; use the realized alias
                    rec.theta_estimate = lemma2_focus(cfg, rec.best_subcarrier, dp).theta;
                out.slots.push_back(rec);
            }

            finish(out);
            out.best_subcarrier = out.slots[std::size_t(out.best_slot)].best_subcarrier;
            return out;
        }
    } // namespace

    rainbow_peak select_rainbow_peak(const system_config &cfg, std::span<const cdouble> received)
    {
        require(received.size() == std::size_t(cfg.n_subcarriers), "need one measurement per subcarrier");
        rainbow_peak best{0, -1.0};
        for (int m = 1; m <= cfg.n_subcarriers; ++m)
        {
            const double metric = std::norm(cfg.subcarrier_hz(m) * received[std::size_t(m - 1)]);
            if (metric > best.metric)
                best = {m, metric};
        }
        return best;
    }

    training_outcome exhaustive_training(const system_config &cfg, const polar_location &loc, const codebook &cb,
                                         const pilot_settings &pilots)
    {
        require(cb.n_angles() >= 1 && cb.n_rings() >= 1, "codebook is empty");
        training_outcome out;
        out.scheme = training_scheme::exhaustive;

        const int n_slots = slot_budget(cb.n_angles() * cb.n_rings(), pilots);
        out.slots.reserve(std::size_t(n_slots));
        for (int t = 0; t < n_slots; ++t)
        {
            const int s = t / cb.n_angles();
            const int u = t % cb.n_angles();
            const delay_params dp{cb.angles[std::size_t(u)], cb.rings[std::size_t(s)]};
            const auto slot = simulate_measurement(cfg, loc, td_weights(cfg, dp), pilots.pilot_power,
                                                   pilots.noise_variance, derive_seed(pilots.seed, std::uint64_t(t)), t);
            double power = 0.0;
            for (const auto &y : slot.received)
                power += std::norm(y);
            out.slots.push_back({t, dp, power, 0, dp.theta_prime, dp.alpha_prime});
        }

        finish(out);
        out.best_angle_index = out.best_slot % cb.n_angles();
        out.best_ring_index = out.best_slot / cb.n_angles();
        return out;
    }

    training_outcome rainbow_training(const system_config &cfg, const polar_location &loc, const codebook &cb,
                                      double theta_c, const pilot_settings &pilots)
    {
        require(cb.n_rings() >= 1, "codebook has no distance rings");
        return rainbow_core(cfg, loc, training_scheme::rainbow, theta_c, cb.theta_min, cb.theta_max, cb.rings, pilots);
    }

    training_outcome far_field_rainbow_training(const system_config &cfg, const polar_location &loc, double theta_c,
                                                double theta_min, double theta_max, const pilot_settings &pilots)
    {
        return rainbow_core(cfg, loc, training_scheme::far_field_rainbow, theta_c, theta_min, theta_max, {0.0},
                            pilots);
    }

} // namespace nfr
