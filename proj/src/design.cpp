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

#include "losmimo/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace losmimo
{
    namespace
    {
        constexpr double kDedupeTol = 1e-4; // separations closer than this are one candidate

        LinkGeometry broadside_link(double separation_m, double distance_m, const DesignSpec &spec)
        {
            LinkGeometry geom;
            geom.n_tx = spec.n_tx;
            geom.m_rx = spec.m_rx;
            geom.d_tx_m = separation_m;
            geom.d_rx_m = separation_m;
            geom.range_m = distance_m;
            return geom;
        }

        bool fits_length_caps(double separation_m, const DesignSpec &spec)
        {
            return (spec.n_tx - 1) * separation_m <= spec.length_max_tx_m &&
                   (spec.m_rx - 1) * separation_m <= spec.length_max_rx_m;
        }

        double candidate_score(const DesignCandidate &c, DesignObjective objective)
        {
            switch (objective)
            {
            case DesignObjective::max_min_capacity:
                return c.min_capacity;
            case DesignObjective::max_mean_capacity:
                return c.mean_capacity;
            case DesignObjective::max_optimal_count:
                return static_cast<double>(c.optimal_distances.size());
            }
            return 0.0;
        }
    }

    void validate(const DesignSpec &spec)
    {
        if (!(spec.dist_min_m > 0.0) || !(spec.dist_min_m < spec.dist_max_m))
            throw std::invalid_argument("need 0 < dist_min < dist_max");
        if (!(spec.grid_step_m > 0.0))
            throw std::invalid_argument("grid_step_m must be positive");
        if (!(spec.length_max_tx_m > 0.0) || !(spec.length_max_rx_m > 0.0))
            throw std::invalid_argument("array length caps must be positive");
        if (spec.m_rx < 2 || spec.n_tx < 2)
            throw std::invalid_argument("antenna counts must be at least 2");
        if (!(spec.wavelength.meters > 0.0))
            throw std::invalid_argument("wavelength must be positive");
        if (spec.p_max < 1)
            throw std::invalid_argument("p_max must be at least 1");
        for (double a : spec.anchor_distances)
            if (!(a > 0.0))
                throw std::invalid_argument("anchor distances must be positive");
    }

    std::vector<double> distance_grid(const DesignSpec &spec)
    {
        validate(spec);
        std::vector<double> grid;
        const long steps = std::lround(std::floor(
            (spec.dist_max_m - spec.dist_min_m) / spec.grid_step_m + 1e-9));
        grid.reserve(steps + 1);
        for (long k = 0; k <= steps; ++k)
            grid.push_back(spec.dist_min_m + k * spec.grid_step_m);
        return grid;
    }

    std::vector<SeparationCandidate> candidate_separations(const DesignSpec &spec)
    {
        validate(spec);
        const std::vector<double> anchors =
            spec.anchor_distances.empty() ? distance_grid(spec) : spec.anchor_distances;

        const int big = std::max(spec.m_rx, spec.n_tx);
        const int small = std::min(spec.m_rx, spec.n_tx);
        const std::vector<int> ps = admissible_p(big, small, spec.p_max);

        std::vector<SeparationCandidate> all;
        for (double anchor : anchors)
        {
            for (int p : ps)
            {
                const double d = equal_separation(p, spec.wavelength.meters, anchor, big);
                if (fits_length_caps(d, spec))
                    all.push_back({d, p, anchor});
            }
        }

        // Dedupe within tolerance; the smallest-p source labels the survivor.
        std::sort(all.begin(), all.end(), [](const auto &a, const auto &b) {
            if (a.separation_m != b.separation_m)
                return a.separation_m < b.separation_m;
            if (a.p != b.p)
                return a.p < b.p;
            return a.anchor_m < b.anchor_m;
        });
        std::vector<SeparationCandidate> out;
        for (const auto &c : all)
        {
            if (!out.empty() && c.separation_m - out.back().separation_m < kDedupeTol)
            {
                if (c.p < out.back().p)
                {
                    out.back().p = c.p;
                    out.back().anchor_m = c.anchor_m;
                }
                continue;
            }
            out.push_back(c);
        }
        return out;
    }

    ProfilePoint evaluate_link(double separation_m, double distance_m, const DesignSpec &spec)
    {
        const ChannelMatrix h =
            build_channel(broadside_link(separation_m, distance_m, spec),
                          spec.wavelength, spec.profile_model);
        const EigenSpectrum es = eigen_spectrum(h);
        const CapacityResult cap = waterfill_capacity(es, spec.snr_db);

        ProfilePoint pt;
        pt.distance_m = distance_m;
        pt.capacity_bps_hz = cap.bits_per_s_per_hz;
        pt.eigenvalues = es.values;
        pt.rank = es.numerical_rank;
        return pt;
    }

    std::vector<ProfilePoint> capacity_profile(double separation_m, const DesignSpec &spec)
    {
        if (!(separation_m > 0.0))
            throw std::invalid_argument("separation must be positive");
        std::vector<ProfilePoint> out;
        for (double dist : distance_grid(spec))
            out.push_back(evaluate_link(separation_m, dist, spec));
        return out;
    }

    DesignReport rank_candidates(const DesignSpec &spec)
    {
        DesignReport report;
        report.spec = spec;
        report.grid = distance_grid(spec);

        for (const SeparationCandidate &sc : candidate_separations(spec))
        {
            DesignCandidate c;
            c.separation_m = sc.separation_m;
            c.p = sc.p;
            c.anchor_m = sc.anchor_m;
            c.profile = capacity_profile(sc.separation_m, spec);
            c.optimal_distances = optimal_distances(sc.separation_m, spec.wavelength.meters,
                                                    spec.m_rx, spec.n_tx,
                                                    spec.dist_min_m, spec.dist_max_m);

            c.min_capacity = std::numeric_limits<double>::infinity();
            double sum = 0.0;
            for (const ProfilePoint &pt : c.profile)
            {
                c.min_capacity = std::min(c.min_capacity, pt.capacity_bps_hz);
                sum += pt.capacity_bps_hz;
            }
            c.mean_capacity = c.profile.empty() ? 0.0 : sum / c.profile.size();
            report.candidates.push_back(std::move(c));
        }

        // Candidates are ascending by separation, so the first strict
        // maximum is also the smallest-separation tie-winner.
        report.best_index = 0;
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < report.candidates.size(); ++i)
        {
            const double score = candidate_score(report.candidates[i], spec.objective);
            if (score > best)
            {
                best = score;
                report.best_index = i;
            }
        }
        return report;
    }

    StretchShiftReport stretch_shift_verify(double sep_a_m, double sep_b_m,
                                            std::span<const ProfilePoint> profile_a,
                                            std::span<const ProfilePoint> profile_b,
                                            const DesignSpec &spec)
    {
        validate(spec);
        if (profile_a.size() != profile_b.size() || profile_a.empty())
            throw std::invalid_argument("profiles must be non-empty and share one grid");

        StretchShiftReport out;
        out.shift_factor = (sep_b_m / sep_a_m) * (sep_b_m / sep_a_m);

        const double lo = profile_b.front().distance_m;
        const double hi = profile_b.back().distance_m;
        for (const ProfilePoint &pt : profile_a)
        {
            const double mapped = pt.distance_m * out.shift_factor;
            if (mapped < lo || mapped > hi)
                continue;

            // linear interpolation on profile_b's grid
            auto upper = std::lower_bound(profile_b.begin(), profile_b.end(), mapped,
                                          [](const ProfilePoint &p, double v) {
                                              return p.distance_m < v;
                                          });
            double cap_b;
            if (upper == profile_b.begin())
                cap_b = upper->capacity_bps_hz;
            else if (upper == profile_b.end())
                cap_b = profile_b.back().capacity_bps_hz;
            else
            {
                const auto lower = std::prev(upper);
                const double span = upper->distance_m - lower->distance_m;
                const double w = span > 0.0 ? (mapped - lower->distance_m) / span : 0.0;
                cap_b = (1.0 - w) * lower->capacity_bps_hz + w * upper->capacity_bps_hz;
            }

            out.max_abs_deviation_bps_hz =
                std::max(out.max_abs_deviation_bps_hz, std::abs(cap_b - pt.capacity_bps_hz));
            ++out.points_compared;
        }
        return out;
    }
}
