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

#include <vector>

#include "losmimo/errors.hpp"

namespace losmimo
{
    // An M x N LOS channel with delta = p/M has orthogonal columns exactly
    // when p is a positive integer that is not a multiple of any divisor of
    // M greater than or equal to M/(N-1). The machinery below enumerates
    // that solution family and maps it to antenna separations.

    // Residual threshold for the numerical orthogonality check: far below
    // any meaningful Gram magnitude, far above double-precision noise.
    inline constexpr double kOrthogonalityTol = 1e-6;

    // Relative slack applied to distance-range endpoints, so separations
    // quoted to a few decimals still count their boundary distances.
    inline constexpr double kRangeSlack = 1e-3;

    struct DivisorSet
    {
        int m = 0; // M (receive count, the larger array)
        int n = 0; // N (transmit count), 2 <= N <= M
        std::vector<int> divisors; // ascending
    };

    // Divisors of m that are >= m/(n-1). The threshold comparison is done in
    // exact integer arithmetic (v*(n-1) >= m). Requires 2 <= n <= m; n > m
    // raises swap_required.
    DivisorSet divisor_set(int m, int n);

    // All p in [1, p_max] that are not a multiple of any element of
    // divisor_set(m, n), ascending.
    std::vector<int> admissible_p(int m, int n, int p_max);

    struct OrthogonalityResult
    {
        bool orthogonal = false;
        double max_residual = 0.0; // max over q of |1-e^{j2pi delta M q}| / |1-e^{j2pi delta q}|
        int worst_q = 0;
    };

    // Direct numerical evaluation of the orthogonality conditions at a given
    // delta, for q = 1..n-1. A vanishing denominator (delta*q integer) means
    // parallel columns: false with infinite residual.
    OrthogonalityResult orthogonality_check(double delta, int m, int n);

    struct AspLink
    {
        double lambda_m = 0.0;
        double range_m = 0.0;
        double theta_tx_rad = 0.0;
        double theta_rx_rad = 0.0;
    };

    struct AspSolutionSet
    {
        int m = 0;
        int n = 0;
        AspLink link;
        std::vector<int> admissible_p; // ascending, truncated at p_max
        std::vector<double> asp_m2;    // d_tx * d_rx per p: p * lambda R / (M cos cos)
    };

    // Optimum antenna separation products for a link. The larger antenna
    // count plays the role of M (N > M is handled by interchanging the
    // roles). Endfire arrays (cos theta = 0) have no solution: delta is then
    // identically zero and can never reach p/M.
    AspSolutionSet asp_solutions(const AspLink &link, int m, int n, int p_max);

    // Equal-separation specialization d = sqrt(p * lambda * D / M) for
    // parallel broadside arrays at distance D, where m_antennas is the count
    // playing M. p must be admissible for the caller's (M, N).
    double equal_separation(int p, double lambda_m, double distance_m, int m_antennas);

    // All distances in [dist_min, dist_max] at which a given equal
    // separation is optimum: D = d^2 M / (p lambda) over admissible p,
    // ascending. Empty when no admissible distance falls in range.
    std::vector<double> optimal_distances(double separation_m, double lambda_m, int m, int n,
                                          double dist_min_m, double dist_max_m);

    // Distance at which separation sep_to reproduces the delta that sep_from
    // attains at dist_from: D' = D * (d'/d)^2.
    double shifted_distance(double sep_from_m, double sep_to_m, double dist_from_m);
}
