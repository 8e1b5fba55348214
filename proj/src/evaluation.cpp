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

#include "nfr/evaluation.hpp"
#include "nfr/channel.hpp"
#include "nfr/error.hpp"
#include "nfr/parallel.hpp"
#include "nfr/seeding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace nfr
{
    double average_rate(const system_config &cfg, const polar_location &loc, const weight_set &ws, double snr)
    {
        require(snr >= 0.0, "snr must be non-negative");
        const auto g = response_gains(cfg, loc, ws);
        double acc = 0.0;
        for (const auto &v : g)
            acc += std::log2(1.0 + snr * std::norm(v));
        return acc / cfg.n_subcarriers;
    }

    weight_set perfect_csi_weights(const system_config &cfg, const polar_location &loc)
    {
        loc.validate();
        std::vector<subcarrier_vector> w;
        w.reserve(std::size_t(cfg.n_subcarriers));
        for (int m = 1; m <= cfg.n_subcarriers; ++m)
        {
            auto a = array_response(cfg, m, loc);
            const double norm = a.norm();
            for (auto &v : a.entries)
                v = std::conj(v) / norm;
            w.push_back(std::move(a));
        }
        return weight_set::per_subcarrier(cfg, std::move(w));
    }

    std::string_view to_string(strategy s)
    {
        switch (s)
        {
        case strategy::perfect_csi:
            return "perfect_csi";
        case strategy::exhaustive:
            return "exhaustive";
        case strategy::rainbow:
            return "rainbow";
        case strategy::far_field_rainbow:
            return "farfield_rainbow";
        }
        return "unknown";
    }

    std::optional<strategy> parse_strategy(std::string_view name)
    {
        for (auto s : {strategy::perfect_csi, strategy::exhaustive, strategy::rainbow, strategy::far_field_rainbow})
            if (name == to_string(s))
                return s;
        return std::nullopt;
    }

    std::string_view to_string(sweep_axis a)
    {
        switch (a)
        {
        case sweep_axis::overhead:
            return "overhead";
        case sweep_axis::snr:
            return "snr";
        case sweep_axis::distance:
            return "distance";
        case sweep_axis::angle:
            return "angle";
        }
        return "unknown";
    }

    std::optional<sweep_axis> parse_sweep_axis(std::string_view name)
    {
        for (auto a : {sweep_axis::overhead, sweep_axis::snr, sweep_axis::distance, sweep_axis::angle})
            if (name == to_string(a))
                return a;
        return std::nullopt;
    }

    double uniform_range::draw(std::mt19937_64 &rng) const
    {
        if (lo == hi)
            return lo;
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }

    void scenario::validate() const
    {
        system.validate();
        require(trials >= 1, "scenario needs at least one trial");
        require(!strategies.empty(), "scenario needs at least one strategy");
        require(!axis_values.empty(), "scenario needs at least one sweep point");
        require(t_max >= 1, "t_max must be at least 1");
        require(theta.lo <= theta.hi && theta.lo >= -1.0 && theta.hi <= 1.0, "user angle range must lie in [-1, 1]");
        require(distance.lo <= distance.hi && distance.lo > 0.0, "user distance range must be positive");
        require(theta_min < theta_c && theta_c < theta_max, "theta_c must lie inside (theta_min, theta_max)");
        require(rho_min > 0.0 && n_angles >= 1 && n_rings >= 1, "invalid codebook parameters");
        for (double v : axis_values)
        {
            require(std::isfinite(v), "sweep values must be finite");
            if (axis == sweep_axis::overhead)
                require(v >= 0.0 && v == std::floor(v), "overhead sweep values must be non-negative integers");
            if (axis == sweep_axis::distance)
                require(v > 0.0, "distance sweep values must be positive");
            if (axis == sweep_axis::angle)
                require(v >= -1.0 && v <= 1.0, "angle sweep values must lie in [-1, 1]");
        }
    }

    const rate_row &rate_report::at(strategy s, double axis_value) const
    {
        for (const auto &row : rows)
            if (row.strat == s && row.axis_value == axis_value)
                return row;
        throw invalid_argument("no report row for " + std::string(to_string(s)) + " at " + std::to_string(axis_value));
    }

    double noise_variance_for(const system_config &cfg, const polar_location &loc, double snr_db)
    {
        const double beta = path_gain_center(cfg, loc);
        return cfg.n_antennas * beta * beta / std::pow(10.0, snr_db / 10.0);
    }

    namespace
    {
        int native_overhead(strategy s, const scenario &sc)
        {
            switch (s)
            {
            case strategy::perfect_csi:
                return 0;
            case strategy::exhaustive:
                return sc.n_angles * sc.n_rings;
            case strategy::rainbow:
                return sc.n_rings;
            case strategy::far_field_rainbow:
                return 1;
            }
            return 0;
        }

        training_outcome train(strategy s, const scenario &sc, const codebook &cb, const polar_location &loc,
                               const pilot_settings &pilots)
        {
            switch (s)
            {
            case strategy::exhaustive:
                return exhaustive_training(sc.system, loc, cb, pilots);
            case strategy::rainbow:
                return rainbow_training(sc.system, loc, cb, sc.theta_c, pilots);
            case strategy::far_field_rainbow:
                return far_field_rainbow_training(sc.system, loc, sc.theta_c, sc.theta_min, sc.theta_max, pilots);
            case strategy::perfect_csi:
                break;
            }
            throw invalid_argument("perfect_csi does not train");
        }

        class served_rate_cache
        {
        public:
            served_rate_cache(const system_config &cfg, const polar_location &loc, double snr)
                : cfg_(cfg), loc_(loc), snr_(snr)
            {
            }

            double operator()(const slot_record &estimate)
            {
                const auto key = std::make_pair(estimate.theta_estimate, estimate.alpha_estimate);
                if (auto it = cache_.find(key); it != cache_.end())
                    return it->second;
                const auto ws = td_weights(cfg_, {estimate.theta_estimate, estimate.alpha_estimate});
                const double rate = average_rate(cfg_, loc_, ws, snr_);
                cache_.emplace(key, rate);
                return rate;
            }

        private:
            const system_config &cfg_;
            polar_location loc_;
            double snr_;
            std::map<std::pair<double, double>, double> cache_;
        };

        // rates[point * n_strategies + strategy]
        std::vector<double> run_trial(const scenario &sc, const codebook &cb, std::size_t trial)
        {
            const std::uint64_t trial_seed = derive_seed(sc.seed, trial);
            std::mt19937_64 rng(trial_seed);
            const polar_location drawn{sc.distance.draw(rng), sc.theta.draw(rng)};

            const std::size_t n_points = sc.axis_values.size();
            const std::size_t n_strat = sc.strategies.size();
            std::vector<double> rates(n_points * n_strat, 0.0);

            auto location_at = [&](double v)
            {
                polar_location loc = drawn;
                if (sc.axis == sweep_axis::distance)
                    loc.r_m = v;
                else if (sc.axis == sweep_axis::angle)
                    loc.theta = v;
                return loc;
            };

            if (sc.axis == sweep_axis::overhead)
            {
                const double snr = std::pow(10.0, sc.snr_db / 10.0);
                const double max_budget = *std::max_element(sc.axis_values.begin(), sc.axis_values.end());
                served_rate_cache serve(sc.system, drawn, snr);
                const pilot_settings base{1.0, noise_variance_for(sc.system, drawn, sc.snr_db), 0, std::nullopt};

                for (std::size_t k = 0; k < n_strat; ++k)
                {
                    const strategy s = sc.strategies[k];
                    if (s == strategy::perfect_csi)
                    {
                        const double r = average_rate(sc.system, drawn, perfect_csi_weights(sc.system, drawn), snr);
                        for (std::size_t j = 0; j < n_points; ++j)
                            rates[j * n_strat + k] = r;
                        continue;
                    }
                    const int cap = std::min({native_overhead(s, sc), sc.t_max, int(max_budget)});
                    if (cap < 1)
                        continue;
                    pilot_settings pilots = base;
                    pilots.seed = derive_seed(trial_seed, 1000 + k);
                    pilots.max_slots = cap;
                    const auto outcome = train(s, sc, cb, drawn, pilots);
                    for (std::size_t j = 0; j < n_points; ++j)
                    {
                        const int budget = std::min(cap, int(sc.axis_values[j]));
                        if (budget >= 1)
                            rates[j * n_strat + k] = serve(outcome.best_after(budget));
                    }
                }
                return rates;
            }

            for (std::size_t j = 0; j < n_points; ++j)
            {
                const polar_location loc = location_at(sc.axis_values[j]);
                const double snr_db = sc.axis == sweep_axis::snr ? sc.axis_values[j] : sc.snr_db;
                const double snr = std::pow(10.0, snr_db / 10.0);
                served_rate_cache serve(sc.system, loc, snr);
                const pilot_settings base{1.0, noise_variance_for(sc.system, loc, snr_db), 0, std::nullopt};

                for (std::size_t k = 0; k < n_strat; ++k)
                {
                    const strategy s = sc.strategies[k];
                    if (s == strategy::perfect_csi)
                    {
                        rates[j * n_strat + k] = average_rate(sc.system, loc, perfect_csi_weights(sc.system, loc), snr);
                        continue;
                    }
                    pilot_settings pilots = base;
                    pilots.seed = derive_seed(derive_seed(trial_seed, j), 1000 + k);
                    pilots.max_slots = std::min(native_overhead(s, sc), sc.t_max);
                    const auto outcome = train(s, sc, cb, loc, pilots);
                    rates[j * n_strat + k] = serve(outcome.best_after(outcome.overhead));
                }
            }
            return rates;
        }
    } // namespace

    rate_report run_scenario(const scenario &sc)
    {
        sc.validate();
        const codebook cb = build_codebook(sc.theta_min, sc.theta_max, sc.rho_min, sc.n_angles, sc.n_rings);

        std::vector<std::vector<double>> per_trial(std::size_t(sc.trials));
        parallel_for(per_trial.size(), [&](std::size_t i) { per_trial[i] = run_trial(sc, cb, i); });

        rate_report report;
        report.axis = sc.axis;
        const std::size_t n_strat = sc.strategies.size();
        for (std::size_t j = 0; j < sc.axis_values.size(); ++j)
            for (std::size_t k = 0; k < n_strat; ++k)
            {
                rate_row row;
                row.axis_value = sc.axis_values[j];
                row.strat = sc.strategies[k];
                row.trials = sc.trials;
                row.samples.reserve(per_trial.size());
                for (const auto &t : per_trial)
                    row.samples.push_back(t[j * n_strat + k]);

                double sum = 0.0;
                for (double v : row.samples)
                    sum += v;
                row.mean_rate = sum / row.trials;
                if (row.trials > 1)
                {
                    double sq = 0.0;
                    for (double v : row.samples)
                        sq += (v - row.mean_rate) * (v - row.mean_rate);
                    row.std_rate = std::sqrt(sq / (row.trials - 1));
                }
                report.rows.push_back(std::move(row));
            }
        return report;
    }

} // namespace nfr
