// SPDX-License-Identifier: Apache-2.0
//
// losmimo - LOS MIMO channel modelling and antenna separation design
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

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <optional>
#include <sstream>

#include "losmimo/design.hpp"
#include "losmimo/io.hpp"
#include "losmimo/verify.hpp"

namespace
{
    constexpr int kExitOk = 0;
    constexpr int kExitValidation = 1;
    constexpr int kExitComputation = 2;

    double deg_to_rad(double deg)
    {
        return deg * std::numbers::pi / 180.0;
    }

    struct CommonOptions
    {
        double freq_ghz = 28.0;
        std::optional<double> lambda_m;
        int m_rx = 3;
        int n_tx = 3;
        double snr_db = 13.0;
        double theta_tx_deg = 0.0;
        double theta_rx_deg = 0.0;
        double phi_rx_deg = 0.0;
        std::string model = "exact";
        int p_max = 64;
        std::string out_path;
    };

    struct RangeSpec
    {
        double min = 10.0;
        double max = 100.0;
        double step = 0.5;
    };

    RangeSpec parse_range(const std::string &text)
    {
        RangeSpec r;
        char c1 = 0, c2 = 0;
        std::istringstream is(text);
        if (!(is >> r.min >> c1 >> r.max >> c2 >> r.step) || c1 != ':' || c2 != ':' ||
            !is.eof())
            throw CLI::ValidationError("--range", "expected min:max:step, got '" + text + "'");
        if (!(r.min > 0.0) || !(r.min < r.max) || !(r.step > 0.0))
            throw CLI::ValidationError("--range", "need 0 < min < max and step > 0");
        return r;
    }

    losmimo::Wavelength wavelength_of(const CommonOptions &opt)
    {
        if (opt.lambda_m)
            return losmimo::Wavelength::from_meters(*opt.lambda_m);
        return losmimo::Wavelength::from_frequency_ghz(opt.freq_ghz);
    }

    losmimo::PathModel model_of(const CommonOptions &opt)
    {
        if (opt.model == "exact")
            return losmimo::PathModel::exact;
        if (opt.model == "approx" || opt.model == "approximate")
            return losmimo::PathModel::approximate;
        throw CLI::ValidationError("--model", "expected 'exact' or 'approx'");
    }

    void emit(const std::string &text, const std::string &out_path)
    {
        if (out_path.empty())
        {
            std::cout << text;
            return;
        }
        std::ofstream ofs(out_path, std::ios::binary);
        if (!ofs)
            throw std::runtime_error("cannot open output file: " + out_path);
        ofs << text;
    }

    // The sweep subcommands model the facing-vehicles case (parallel
    // broadside arrays, R = D), so tilt flags only exist where they act:
    // on the separation-product solver.
    void add_common(CLI::App *cmd, CommonOptions &opt, bool with_snr = true,
                    bool with_angles = false)
    {
        auto *freq = cmd->add_option("--freq-ghz", opt.freq_ghz, "Carrier frequency in GHz");
        freq->default_val(28.0);
        auto *lam = cmd->add_option("--lambda-m", opt.lambda_m, "Wavelength in meters");
        lam->excludes(freq);
        freq->excludes(lam);

        cmd->add_option("--m", opt.m_rx, "Receive antennas M")->default_val(3)
            ->check(CLI::Range(2, 1024));
        cmd->add_option("--n", opt.n_tx, "Transmit antennas N")->default_val(3)
            ->check(CLI::Range(2, 1024));
        if (with_snr)
            cmd->add_option("--snr-db", opt.snr_db, "Total receive SNR in dB")->default_val(13.0);
        if (with_angles)
        {
            cmd->add_option("--theta-tx-deg", opt.theta_tx_deg, "Tx tilt from vertical, degrees");
            cmd->add_option("--theta-rx-deg", opt.theta_rx_deg, "Rx tilt from vertical, degrees");
            cmd->add_option("--phi-rx-deg", opt.phi_rx_deg, "Rx azimuth rotation, degrees");
        }
        cmd->add_option("--model", opt.model, "Path model: exact | approx")->default_val("exact");
        cmd->add_option("--p-max", opt.p_max, "Largest solution index to enumerate")
            ->default_val(64)->check(CLI::Range(1, 100000));
        cmd->add_option("--out", opt.out_path, "Write output to a file instead of stdout");
    }

    losmimo::DesignSpec sweep_spec(const CommonOptions &opt, const RangeSpec &range)
    {
        losmimo::DesignSpec spec;
        spec.dist_min_m = range.min;
        spec.dist_max_m = range.max;
        spec.grid_step_m = range.step;
        spec.m_rx = opt.m_rx;
        spec.n_tx = opt.n_tx;
        spec.wavelength = wavelength_of(opt);
        spec.snr_db = opt.snr_db;
        spec.p_max = opt.p_max;
        spec.profile_model = model_of(opt);
        return spec;
    }

    void warn_if_near_field(const losmimo::DesignSpec &spec, double separation)
    {
        if (spec.profile_model != losmimo::PathModel::approximate)
            return;
        losmimo::LinkGeometry geom;
        geom.n_tx = spec.n_tx;
        geom.m_rx = spec.m_rx;
        geom.d_tx_m = separation;
        geom.d_rx_m = separation;
        geom.range_m = spec.dist_min_m;
        if (!losmimo::in_far_field(geom))
            std::cerr << "warning: approximate path model with R < 10x array aperture at the "
                         "near end of the sweep; first-order path lengths may be inaccurate\n";
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"LOS MIMO channel analysis and antenna separation design"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string range_text = "10:100:0.5";
    double separation = 0.0;
    double distance = 50.0;
    double length_max = 1.8;
    std::string objective = "min";

    auto *asp_cmd = app.add_subcommand(
        "asp", "Optimum antenna separation products at one distance (CSV)");
    add_common(asp_cmd, opt, false, true);
    asp_cmd->add_option("--distance", distance, "Link distance R in meters")->default_val(50.0);
    asp_cmd->add_option("--length-max", length_max, "Array length cap in meters")
        ->default_val(1.8);

    auto *sep_cmd = app.add_subcommand(
        "separations", "Equal separation d vs distance, one column per solution index (CSV)");
    add_common(sep_cmd, opt, false);
    sep_cmd->add_option("--range", range_text, "Distance sweep min:max:step in meters");

    std::string dump_channel_path;
    double dump_at = 0.0;

    auto *eigs_cmd = app.add_subcommand(
        "eigs", "Eigenvalues of H H^H over a distance sweep (CSV)");
    add_common(eigs_cmd, opt, false);
    eigs_cmd->add_option("--sep", separation, "Antenna separation d in meters")->required();
    eigs_cmd->add_option("--range", range_text, "Distance sweep min:max:step in meters");
    eigs_cmd->add_option("--dump-channel", dump_channel_path,
                         "Also write the channel matrix as JSON to this file");
    eigs_cmd->add_option("--dump-at", dump_at,
                         "Distance for --dump-channel (default: range start)");

    auto *cap_cmd = app.add_subcommand(
        "capacity", "Water-filling capacity over a distance sweep (CSV)");
    add_common(cap_cmd, opt);
    cap_cmd->add_option("--sep", separation, "Antenna separation d in meters")->required();
    cap_cmd->add_option("--range", range_text, "Distance sweep min:max:step in meters");

    std::string profiles_dir;

    auto *design_cmd = app.add_subcommand(
        "design", "Rank candidate separations over a distance range (JSON report)");
    add_common(design_cmd, opt);
    design_cmd->add_option("--range", range_text, "Distance range min:max:step in meters");
    design_cmd->add_option("--length-max", length_max, "Array length cap in meters")
        ->default_val(1.8);
    design_cmd->add_option("--objective", objective,
                           "Ranking objective: min | mean | count")->default_val("min");
    design_cmd->add_option("--profiles-dir", profiles_dir,
                           "Also write one profile CSV per candidate into this directory");

    auto *verify_cmd = app.add_subcommand(
        "verify", "Run the built-in reference-value checks and print pass/fail");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try
    {
        if (asp_cmd->parsed())
        {
            losmimo::AspLink link{wavelength_of(opt).meters, distance,
                                  deg_to_rad(opt.theta_tx_deg), deg_to_rad(opt.theta_rx_deg)};
            const auto solutions = losmimo::asp_solutions(link, opt.m_rx, opt.n_tx, opt.p_max);
            emit(losmimo::asp_table_csv(solutions, length_max, length_max), opt.out_path);
        }
        else if (sep_cmd->parsed())
        {
            const RangeSpec range = parse_range(range_text);
            const losmimo::DesignSpec spec = sweep_spec(opt, range);
            const std::vector<double> grid = losmimo::distance_grid(spec);
            const int big = std::max(opt.m_rx, opt.n_tx);
            const auto ps = losmimo::admissible_p(big, std::min(opt.m_rx, opt.n_tx), opt.p_max);
            emit(losmimo::separations_csv(grid, ps, spec.wavelength.meters, big), opt.out_path);
        }
        else if (eigs_cmd->parsed())
        {
            const losmimo::DesignSpec spec = sweep_spec(opt, parse_range(range_text));
            warn_if_near_field(spec, separation);
            emit(losmimo::eigs_csv(losmimo::capacity_profile(separation, spec)), opt.out_path);
            if (!dump_channel_path.empty())
            {
                losmimo::LinkGeometry geom;
                geom.n_tx = spec.n_tx;
                geom.m_rx = spec.m_rx;
                geom.d_tx_m = separation;
                geom.d_rx_m = separation;
                geom.range_m = dump_at > 0.0 ? dump_at : spec.dist_min_m;
                const auto h = losmimo::build_channel(geom, spec.wavelength, spec.profile_model);
                if (!h.warning.empty())
                    std::cerr << "warning: " << h.warning << '\n';
                emit(losmimo::channel_json(h).dump(2) + "\n", dump_channel_path);
            }
        }
        else if (cap_cmd->parsed())
        {
            const losmimo::DesignSpec spec = sweep_spec(opt, parse_range(range_text));
            warn_if_near_field(spec, separation);
            const double bound = losmimo::max_capacity_bound(spec.m_rx, spec.n_tx, spec.snr_db);
            emit(losmimo::capacity_csv(losmimo::capacity_profile(separation, spec), bound),
                 opt.out_path);
        }
        else if (design_cmd->parsed())
        {
            losmimo::DesignSpec spec = sweep_spec(opt, parse_range(range_text));
            spec.length_max_tx_m = length_max;
            spec.length_max_rx_m = length_max;
            if (objective == "min")
                spec.objective = losmimo::DesignObjective::max_min_capacity;
            else if (objective == "mean")
                spec.objective = losmimo::DesignObjective::max_mean_capacity;
            else if (objective == "count")
                spec.objective = losmimo::DesignObjective::max_optimal_count;
            else
                throw CLI::ValidationError("--objective", "expected min, mean or count");

            const losmimo::DesignReport report = losmimo::rank_candidates(spec);
            emit(losmimo::design_report_json(report).dump(2) + "\n", opt.out_path);
            if (!profiles_dir.empty())
            {
                std::filesystem::create_directories(profiles_dir);
                for (std::size_t i = 0; i < report.candidates.size(); ++i)
                {
                    const auto &cand = report.candidates[i];
                    std::ostringstream name;
                    name << "candidate_" << std::setfill('0') << std::setw(3) << i << "_d"
                         << losmimo::format_double(cand.separation_m, 6) << ".csv";
                    emit(losmimo::profile_csv(cand.profile),
                         (std::filesystem::path(profiles_dir) / name.str()).string());
                }
            }
        }
        else if (verify_cmd->parsed())
        {
            bool all_ok = true;
            for (const auto &check : losmimo::verify::run_reference_checks())
            {
                std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.id << ' '
                          << check.name << " -- " << check.detail << '\n';
                all_ok = all_ok && check.passed;
            }
            if (!all_ok)
            {
                std::cerr << "verify: some reference checks failed\n";
                return kExitComputation;
            }
        }
    }
    catch (const CLI::ValidationError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const losmimo::no_solution &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const std::out_of_range &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitOk;
}
