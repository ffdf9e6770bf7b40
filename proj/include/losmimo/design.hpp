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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "losmimo/asp.hpp"
#include "losmimo/spectrum.hpp"

namespace losmimo
{
    // Antenna-separation design for a V2V-style link: two parallel broadside
    // ULAs (theta = 0, R = D) whose distance D varies over a range. A
    // separation is a candidate when it is optimum at some anchor distance
    // and both arrays fit their length caps; candidates are then scored on a
    // capacity profile over the distance grid.

    enum class DesignObjective
    {
        max_min_capacity,  // maximize the worst capacity over the grid
        max_mean_capacity, // maximize the mean capacity over the grid
        max_optimal_count  // maximize the number of in-range optimum distances
    };

    struct DesignSpec
    {
        double dist_min_m = 10.0;
        double dist_max_m = 100.0;
        int m_rx = 3;
        int n_tx = 3;
        Wavelength wavelength = Wavelength::from_frequency_ghz(28.0);
        double snr_db = 13.0;
        double length_max_tx_m = 1.8; // (N-1) d must fit
        double length_max_rx_m = 1.8; // (M-1) d must fit
        double grid_step_m = 0.5;
        std::vector<double> anchor_distances; // empty: anchor at the grid points
        DesignObjective objective = DesignObjective::max_min_capacity;
        int p_max = 64;
        PathModel profile_model = PathModel::exact;
    };

    void validate(const DesignSpec &spec);

    // dist_min, dist_min + step, ... up to dist_max (inclusive within a step
    // rounding tolerance).
    std::vector<double> distance_grid(const DesignSpec &spec);

    struct SeparationCandidate
    {
        double separation_m = 0.0;
        int p = 0;             // solution index it came from
        double anchor_m = 0.0; // anchor distance it came from
    };

    // Union over anchors of the admissible equal separations, filtered by
    // the array length caps and deduplicated within 1e-4 m. Sorted ascending
    // by separation.
    std::vector<SeparationCandidate> candidate_separations(const DesignSpec &spec);

    struct ProfilePoint
    {
        double distance_m = 0.0;
        double capacity_bps_hz = 0.0;
        std::vector<double> eigenvalues; // descending, min(M,N) of them
        int rank = 0;
    };

    // Channel eigenvalues and water-filling capacity for separation d at a
    // single distance (theta_tx = theta_rx = 0, R = D).
    ProfilePoint evaluate_link(double separation_m, double distance_m, const DesignSpec &spec);

    // evaluate_link at every grid distance.
    std::vector<ProfilePoint> capacity_profile(double separation_m, const DesignSpec &spec);

    struct DesignCandidate
    {
        double separation_m = 0.0;
        int p = 0;
        double anchor_m = 0.0;
        double min_capacity = 0.0;
        double mean_capacity = 0.0;
        std::vector<double> optimal_distances; // in-range optimum distances, ascending
        std::vector<ProfilePoint> profile;     // one entry per grid point
    };

    struct DesignReport
    {
        std::vector<double> grid;
        std::vector<DesignCandidate> candidates; // ascending by separation
        std::size_t best_index = 0;
        DesignSpec spec;
    };

    // Profiles and scores every candidate under the chosen objective. Ties
    // go to the smaller separation (smaller arrays). Deterministic: equal
    // specs produce identical reports.
    DesignReport rank_candidates(const DesignSpec &spec);

    struct StretchShiftReport
    {
        double max_abs_deviation_bps_hz = 0.0;
        int points_compared = 0;
        double shift_factor = 0.0; // (d_b / d_a)^2
    };

    // Checks that profile_b is profile_a stretched by (d_b/d_a)^2: capacity
    // of d_b at D*(d_b/d_a)^2 (linearly interpolated on the grid) against
    // capacity of d_a at D, at every grid point whose image stays in range.
    StretchShiftReport stretch_shift_verify(double sep_a_m, double sep_b_m,
                                            std::span<const ProfilePoint> profile_a,
                                            std::span<const ProfilePoint> profile_b,
                                            const DesignSpec &spec);
}
