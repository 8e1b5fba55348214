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

#include "nfr/cli/commands.hpp"
#include "nfr/beamforming.hpp"
#include "nfr/evaluation.hpp"
#include "nfr/training.hpp"

#include <cmath>
#include <fstream>

namespace nfr::cli
{
    namespace
    {
        std::string schema_line(std::string_view name)
        {
            return "# schema: nfr." + std::string(name) + " v" + std::to_string(schema_version) + "\n";
        }

        void prepare_out_dir(const run_manifest &manifest, const config &cfg)
        {
            std::error_code ec;
            std::filesystem::create_directories(manifest.out_dir, ec);
            if (ec)
                throw usage_error("cannot create output directory '" + manifest.out_dir.string() + "'");
            write_atomically(manifest.out_dir / "effective.cfg", cfg.to_text());
        }

        std::vector<int> spread_subcarriers(int n_subcarriers, int count)
        {
            if (count < 1)
                throw usage_error("gain_map_subcarriers must be at least 1");
            count = std::min(count, n_subcarriers);
            if (count == 1)
                return {(n_subcarriers + 1) / 2};
            std::vector<int> out;
            for (int i = 0; i < count; ++i)
                out.push_back(1 + int(std::lround(double(i) * (n_subcarriers - 1) / (count - 1))));
            return out;
        }

        std::vector<double> linspace(double lo, double hi, long long points, std::string_view what)
        {
            if (points < 2 || !(hi > lo))
                throw usage_error(std::string(what) + ": need at least 2 points over a non-empty range");
            std::vector<double> out(static_cast<std::size_t>(points));
            for (long long i = 0; i < points; ++i)
                out[std::size_t(i)] = lo + (hi - lo) * double(i) / double(points - 1);
            return out;
        }

        polar_location user_location(const config &cfg)
        {
            const polar_location loc{cfg.get_real("user_r"), cfg.get_real("user_theta")};
            try
            {
                loc.validate();
            }
            catch (const invalid_argument &e)
            {
                throw usage_error(e.what());
            }
            return loc;
        }
    } // namespace

    void write_atomically(const std::filesystem::path &path, const std::string &content)
    {
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw error("cannot open '" + tmp.string() + "' for writing");
            out << content;
            out.flush();
            if (!out)
                throw error("failed writing '" + tmp.string() + "'");
        }
        std::filesystem::rename(tmp, path);
    }

    config effective_config(const run_manifest &manifest)
    {
        config cfg = manifest.config_path ? config::load(*manifest.config_path) : config{};
        for (const auto &assignment : manifest.overrides)
            cfg.set_assignment(assignment);
        if (manifest.seed)
            cfg.set("seed", std::to_string(*manifest.seed));
        if (manifest.fast)
            cfg.set("trials", "100");
        if (manifest.trials)
        {
            if (*manifest.trials < 1)
                throw usage_error("--trials must be at least 1");
            cfg.set("trials", std::to_string(*manifest.trials));
        }
        return cfg;
    }

    std::vector<std::filesystem::path> cmd_gain_map(const run_manifest &manifest)
    {
        const config cfg = effective_config(manifest);
        const system_config sys = cfg.system();
        const delay_params dp{cfg.get_real("theta_prime"), cfg.get_real("alpha_prime")};
        const auto ws = td_weights(sys, dp);
        const auto subcarriers = spread_subcarriers(sys.n_subcarriers, int(cfg.get_int("gain_map_subcarriers")));

        auto slices = cfg.get_word_list("slices");
        if (slices.empty() || slices.front().empty())
            throw usage_error("slices must name at least one of: angle, distance");

        // validate every slice before writing anything
        for (const auto &slice : slices)
        {
            if (slice == "angle")
            {
                if (dp.alpha_prime < 0.0)
                    throw usage_error("angle slice runs along ring alpha' and needs alpha_prime >= 0");
                if (cfg.get_real("angle_min") < -1.0 || cfg.get_real("angle_max") > 1.0)
                    throw usage_error("angle slice must stay inside [-1, 1]");
            }
            else if (slice == "distance")
            {
                if (dp.theta_prime < -1.0 || dp.theta_prime > 1.0)
                    throw usage_error("distance slice runs along angle theta' and needs theta_prime in [-1, 1]");
                if (cfg.get_real("distance_min") <= 0.0)
                    throw usage_error("distance slice must start at a positive distance");
            }
            else
                throw usage_error("unknown gain-map slice '" + slice + "' (expected angle or distance)");
        }

        prepare_out_dir(manifest, cfg);
        std::vector<std::filesystem::path> written;
        for (const auto &slice : slices)
        {
            const bool angle = slice == "angle";
            const auto sweep = angle ? linspace(cfg.get_real("angle_min"), cfg.get_real("angle_max"),
                                                cfg.get_int("angle_points"), "angle slice")
                                     : linspace(cfg.get_real("distance_min"), cfg.get_real("distance_max"),
                                                cfg.get_int("distance_points"), "distance slice");
            std::string csv = schema_line("gain_map");
            csv += "# slice: " + slice + "; theta_prime = " + format_exact(dp.theta_prime) +
                   "; alpha_prime = " + format_exact(dp.alpha_prime) + " 1/m\n";
            csv += angle ? "# units: subcarrier_hz [Hz], sweep_variable = theta [1], gain [1]\n"
                         : "# units: subcarrier_hz [Hz], sweep_variable = r [m], gain [1]\n";
            csv += "subcarrier_hz,sweep_variable,gain\n";
            for (int m : subcarriers)
                for (double v : sweep)
                {
                    const double theta = angle ? v : dp.theta_prime;
                    const double alpha = angle ? dp.alpha_prime : (1.0 - theta * theta) / (2.0 * v);
                    csv += format_csv(sys.subcarrier_hz(m)) + "," + format_csv(v) + "," +
                           format_csv(gain_at(sys, ws, m, theta, alpha)) + "\n";
                }
            const auto path = manifest.out_dir / ("gain_map_" + slice + ".csv");
            write_atomically(path, csv);
            written.push_back(path);
        }
        return written;
    }

    std::vector<std::filesystem::path> cmd_train(const run_manifest &manifest)
    {
        const config cfg = effective_config(manifest);
        const system_config sys = cfg.system();
        const auto scheme = parse_training_scheme(cfg.get_word("strategy"));
        if (!scheme)
            throw usage_error("unknown training strategy '" + cfg.get_word("strategy") +
                              "' (expected exhaustive, rainbow or farfield_rainbow)");
        const polar_location loc = user_location(cfg);

        codebook cb;
        try
        {
            cb = build_codebook(cfg.get_real("theta_min"), cfg.get_real("theta_max"), cfg.get_real("rho_min"),
                                int(cfg.get_int("n_angles")), int(cfg.get_int("n_rings")));
        }
        catch (const invalid_argument &e)
        {
            throw usage_error(e.what());
        }

        pilot_settings pilots;
        pilots.pilot_power = cfg.get_real("pilot_power");
        if (!(pilots.pilot_power > 0.0))
            throw usage_error("pilot_power must be positive");
        pilots.noise_variance =
            cfg.get_bool("noiseless") ? 0.0 : pilots.pilot_power * noise_variance_for(sys, loc, cfg.get_real("snr_db"));
        pilots.seed = cfg.get_u64("seed");

        const double theta_c = cfg.get_real("theta_c");
        const training_outcome out = [&]
        {
            switch (*scheme)
            {
            case training_scheme::exhaustive:
                return exhaustive_training(sys, loc, cb, pilots);
            case training_scheme::far_field_rainbow:
                return far_field_rainbow_training(sys, loc, theta_c, cb.theta_min, cb.theta_max, pilots);
            case training_scheme::rainbow:
                break;
            }
            return rainbow_training(sys, loc, cb, theta_c, pilots);
        }();

        prepare_out_dir(manifest, cfg);

        std::string slots = schema_line("train_slots");
        slots += "# units: alpha in [1/m]; metric in [W] (exhaustive) or [W Hz^2] (rainbow schemes)\n";
        slots += "slot,theta_prime,alpha_prime,metric,best_subcarrier,theta_estimate,alpha_estimate\n";
        for (const auto &rec : out.slots)
            slots += std::to_string(rec.slot_index) + "," + format_csv(rec.params.theta_prime) + "," +
                     format_csv(rec.params.alpha_prime) + "," + format_csv(rec.metric) + "," +
                     std::to_string(rec.best_subcarrier) + "," + format_csv(rec.theta_estimate) + "," +
                     format_csv(rec.alpha_estimate) + "\n";

        std::string outcome = schema_line("train_outcome");
        outcome += "# units: alpha_hat [1/m], r_hat [m] (inf on the far-field ring), user_r [m]\n";
        outcome += "strategy,theta_hat,alpha_hat,r_hat,overhead,best_slot,best_subcarrier,theta_prime,p,"
                   "user_theta,user_r\n";
        outcome += std::string(to_string(out.scheme)) + "," + format_csv(out.theta_hat) + "," +
                   format_csv(out.alpha_hat) + "," + format_csv(out.r_hat ? *out.r_hat : INFINITY) + "," +
                   std::to_string(out.overhead) + "," + std::to_string(out.best_slot) + "," +
                   std::to_string(out.best_subcarrier) + "," +
                   (out.theta_prime ? format_csv(*out.theta_prime) : std::string()) + "," +
                   (out.theta_prime ? std::to_string(out.alias_p) : std::string()) + "," + format_csv(loc.theta) +
                   "," + format_csv(loc.r_m) + "\n";

        const auto slots_path = manifest.out_dir / "train_slots.csv";
        const auto outcome_path = manifest.out_dir / "train_outcome.csv";
        write_atomically(slots_path, slots);
        write_atomically(outcome_path, outcome);
        return {slots_path, outcome_path};
    }

    std::vector<std::filesystem::path> cmd_sweep(const run_manifest &manifest)
    {
        const config cfg = effective_config(manifest);
        const scenario sc = cfg.sweep_scenario();
        const rate_report report = run_scenario(sc);

        prepare_out_dir(manifest, cfg);
        std::string csv = schema_line("sweep");
        csv += "# axis: " + std::string(to_string(sc.axis)) + "\n";
        csv += "# units: axis_value [slots | dB | m | 1], mean_rate [bit/s/Hz], std [bit/s/Hz], trials [count]\n";
        csv += "axis_value,strategy,mean_rate,std,trials\n";
        for (const auto &row : report.rows)
            csv += format_csv(row.axis_value) + "," + std::string(to_string(row.strat)) + "," +
                   format_csv(row.mean_rate) + "," + format_csv(row.std_rate) + "," + std::to_string(row.trials) + "\n";

        const auto path = manifest.out_dir / ("sweep_" + std::string(to_string(sc.axis)) + ".csv");
        write_atomically(path, csv);
        return {path};
    }

    int run(const run_manifest &manifest, std::ostream &log)
    {
        try
        {
            std::vector<std::filesystem::path> files;
            if (manifest.subcommand == "gain-map")
                files = cmd_gain_map(manifest);
            else if (manifest.subcommand == "train")
                files = cmd_train(manifest);
            else if (manifest.subcommand == "sweep")
                files = cmd_sweep(manifest);
            else
                throw usage_error("unknown subcommand '" + manifest.subcommand + "'");
            for (const auto &f : files)
                log << "wrote " << f.string() << "\n";
            return exit_ok;
        }
        catch (const usage_error &e)
        {
            log << "usage error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const invalid_argument &e) // a precondition rejected a configured value
        {
            log << "usage error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const std::exception &e)
        {
            log << "error: " << e.what() << "\n";
            return exit_numerical;
        }
    }

} // namespace nfr::cli
