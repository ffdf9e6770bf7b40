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

#include "losmimo/io.hpp"

#include <charconv>
#include <nlohmann/json.hpp>
#include <sstream>

namespace losmimo
{
    std::string format_double(double value, int precision)
    {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, precision);
        return std::string(buf, res.ptr);
    }

    std::string eigs_csv(std::span<const ProfilePoint> profile)
    {
        std::ostringstream os;
        const std::size_t n_eigs = profile.empty() ? 0 : profile.front().eigenvalues.size();
        os << "distance_m";
        for (std::size_t i = 0; i < n_eigs; ++i)
            os << ",eig" << (i + 1);
        os << ",rank\n";
        for (const ProfilePoint &pt : profile)
        {
            os << format_double(pt.distance_m);
            for (double e : pt.eigenvalues)
                os << ',' << format_double(e);
            os << ',' << pt.rank << '\n';
        }
        return os.str();
    }

    std::string capacity_csv(std::span<const ProfilePoint> profile, double max_capacity_bps_hz)
    {
        std::ostringstream os;
        os << "distance_m,capacity_bps_hz,max_capacity_bps_hz\n";
        for (const ProfilePoint &pt : profile)
            os << format_double(pt.distance_m) << ',' << format_double(pt.capacity_bps_hz)
               << ',' << format_double(max_capacity_bps_hz) << '\n';
        return os.str();
    }

    std::string profile_csv(std::span<const ProfilePoint> profile)
    {
        std::ostringstream os;
        const std::size_t n_eigs = profile.empty() ? 0 : profile.front().eigenvalues.size();
        os << "distance_m,capacity_bps_hz";
        for (std::size_t i = 0; i < n_eigs; ++i)
            os << ",eig" << (i + 1);
        os << ",rank\n";
        for (const ProfilePoint &pt : profile)
        {
            os << format_double(pt.distance_m) << ',' << format_double(pt.capacity_bps_hz);
            for (double e : pt.eigenvalues)
                os << ',' << format_double(e);
            os << ',' << pt.rank << '\n';
        }
        return os.str();
    }

    std::string asp_table_csv(const AspSolutionSet &solutions,
                              double length_max_tx_m, double length_max_rx_m)
    {
        std::ostringstream os;
        os << "p,asp_m2,d_equal_m,within_length_limit\n";
        for (std::size_t i = 0; i < solutions.admissible_p.size(); ++i)
        {
            const double d_equal = std::sqrt(solutions.asp_m2[i]);
            const bool fits = (solutions.n - 1) * d_equal <= length_max_tx_m &&
                              (solutions.m - 1) * d_equal <= length_max_rx_m;
            os << solutions.admissible_p[i] << ',' << format_double(solutions.asp_m2[i])
               << ',' << format_double(d_equal) << ',' << (fits ? 1 : 0) << '\n';
        }
        return os.str();
    }

    std::string separations_csv(std::span<const double> distances,
                                std::span<const int> admissible,
                                double lambda_m, int m_antennas)
    {
        std::ostringstream os;
        os << "distance_m";
        for (int p : admissible)
            os << ",d_p" << p;
        os << '\n';
        for (double dist : distances)
        {
            os << format_double(dist);
            for (int p : admissible)
                os << ',' << format_double(equal_separation(p, lambda_m, dist, m_antennas));
            os << '\n';
        }
        return os.str();
    }

    static const char *objective_name(DesignObjective obj)
    {
        switch (obj)
        {
        case DesignObjective::max_min_capacity:
            return "max_min_capacity";
        case DesignObjective::max_mean_capacity:
            return "max_mean_capacity";
        case DesignObjective::max_optimal_count:
            return "max_optimal_count";
        }
        return "unknown";
    }

    nlohmann::ordered_json design_report_json(const DesignReport &report)
    {
        nlohmann::ordered_json j;
        j["spec"] = {{"dist_min_m", report.spec.dist_min_m},
                     {"dist_max_m", report.spec.dist_max_m},
                     {"m_rx", report.spec.m_rx},
                     {"n_tx", report.spec.n_tx},
                     {"wavelength_m", report.spec.wavelength.meters},
                     {"snr_db", report.spec.snr_db},
                     {"length_max_tx_m", report.spec.length_max_tx_m},
                     {"length_max_rx_m", report.spec.length_max_rx_m},
                     {"grid_step_m", report.spec.grid_step_m},
                     {"objective", objective_name(report.spec.objective)},
                     {"p_max", report.spec.p_max},
                     {"path_model", report.spec.profile_model == PathModel::exact
                                        ? "exact" : "approximate"}};
        j["grid"] = report.grid;
        j["best_index"] = report.best_index;
        if (report.best_index < report.candidates.size())
            j["best_separation_m"] = report.candidates[report.best_index].separation_m;

        nlohmann::ordered_json cands = nlohmann::ordered_json::array();
        for (const DesignCandidate &c : report.candidates)
        {
            nlohmann::ordered_json jc;
            jc["separation_m"] = c.separation_m;
            jc["source_p"] = c.p;
            jc["source_anchor_m"] = c.anchor_m;
            jc["min_capacity_bps_hz"] = c.min_capacity;
            jc["mean_capacity_bps_hz"] = c.mean_capacity;
            jc["optimal_distances_m"] = c.optimal_distances;
            nlohmann::ordered_json prof = nlohmann::ordered_json::array();
            for (const ProfilePoint &pt : c.profile)
                prof.push_back({{"distance_m", pt.distance_m},
                                {"capacity_bps_hz", pt.capacity_bps_hz},
                                {"eigenvalues", pt.eigenvalues},
                                {"rank", pt.rank}});
            jc["profile"] = std::move(prof);
            cands.push_back(std::move(jc));
        }
        j["candidates"] = std::move(cands);
        return j;
    }

    nlohmann::ordered_json channel_json(const ChannelMatrix &h)
    {
        nlohmann::ordered_json j;
        j["m_rx"] = h.entries.n_rows;
        j["n_tx"] = h.entries.n_cols;
        j["model"] = h.model == PathModel::exact ? "exact" : "approximate";
        j["wavelength_m"] = h.wavelength.meters;
        if (!h.warning.empty())
            j["warning"] = h.warning;

        // row-major entries as [re, im] pairs
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (arma::uword r = 0; r < h.entries.n_rows; ++r)
        {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (arma::uword c = 0; c < h.entries.n_cols; ++c)
                row.push_back({h.entries(r, c).real(), h.entries(r, c).imag()});
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
        return j;
    }
}
