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

#include "losmimo/asp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace losmimo
{
    namespace
    {
        void check_counts(int m, int n)
        {
            if (n < 2)
                throw std::invalid_argument("n must be at least 2, got " + std::to_string(n));
            if (m < 2)
                throw std::invalid_argument("m must be at least 2, got " + std::to_string(m));
            if (n > m)
                throw swap_required("n > m: interchange transmitter and receiver first "
                                    "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
        }

        // |1 - e^{j 2 pi x}| = 2 |sin(pi x)|, reduced to the nearest integer
        // first so the evaluation stays exact for x up to ~1e3 turns.
        double unit_circle_gap(double x)
        {
            return 2.0 * std::abs(std::sin(std::numbers::pi * (x - std::round(x))));
        }
    }

    DivisorSet divisor_set(int m, int n)
    {
        check_counts(m, n);

        DivisorSet out;
        out.m = m;
        out.n = n;
        for (int v = 1; v <= m; ++v)
        {
            // threshold v >= m/(n-1), compared in integers
            if (m % v == 0 && v * (n - 1) >= m)
                out.divisors.push_back(v);
        }
        return out;
    }

    std::vector<int> admissible_p(int m, int n, int p_max)
    {
        if (p_max < 1)
            throw std::invalid_argument("p_max must be at least 1");
        const DivisorSet excl = divisor_set(m, n);

        std::vector<int> out;
        for (int p = 1; p <= p_max; ++p)
        {
            const bool excluded = std::any_of(excl.divisors.begin(), excl.divisors.end(),
                                              [&](int v) { return p % v == 0; });
            if (!excluded)
                out.push_back(p);
        }
        return out;
    }

    OrthogonalityResult orthogonality_check(double delta, int m, int n)
    {
        if (!(delta > 0.0) || !std::isfinite(delta))
            throw std::invalid_argument("delta must be positive and finite");
        if (m < 2 || n < 2)
            throw std::invalid_argument("m and n must be at least 2");

        OrthogonalityResult out;
        for (int q = 1; q < n; ++q)
        {
            const double den = unit_circle_gap(delta * q);
            if (den < 1e-12)
            {
                // parallel columns: the ratio limit is M, not zero
                out.orthogonal = false;
                out.max_residual = std::numeric_limits<double>::infinity();
                out.worst_q = q;
                return out;
            }
            const double residual = unit_circle_gap(delta * m * q) / den;
            if (residual > out.max_residual)
            {
                out.max_residual = residual;
                out.worst_q = q;
            }
        }
        out.orthogonal = out.max_residual < kOrthogonalityTol;
        return out;
    }

    AspSolutionSet asp_solutions(const AspLink &link, int m, int n, int p_max)
    {
        if (!(link.lambda_m > 0.0) || !(link.range_m > 0.0))
            throw std::invalid_argument("wavelength and range must be positive");

        const int big = std::max(m, n);
        const int small = std::min(m, n);
        if (small < 2)
            throw std::invalid_argument("antenna counts must be at least 2");

        const double cos_tx = std::cos(link.theta_tx_rad);
        const double cos_rx = std::cos(link.theta_rx_rad);
        if (cos_tx < 1e-12 || cos_rx < 1e-12)
            throw no_solution("endfire array (cos theta = 0): the separation product diverges");

        AspSolutionSet out;
        out.m = m;
        out.n = n;
        out.link = link;
        out.admissible_p = admissible_p(big, small, p_max);
        out.asp_m2.reserve(out.admissible_p.size());
        const double unit = link.lambda_m * link.range_m / (big * cos_tx * cos_rx);
        for (int p : out.admissible_p)
            out.asp_m2.push_back(p * unit);
        return out;
    }

    double equal_separation(int p, double lambda_m, double distance_m, int m_antennas)
    {
        if (p < 1)
            throw std::invalid_argument("p must be a positive integer");
        if (!(lambda_m > 0.0) || !(distance_m > 0.0))
            throw std::invalid_argument("wavelength and distance must be positive");
        if (m_antennas < 2)
            throw std::invalid_argument("antenna count must be at least 2");
        return std::sqrt(p * lambda_m * distance_m / m_antennas);
    }

    std::vector<double> optimal_distances(double separation_m, double lambda_m, int m, int n,
                                          double dist_min_m, double dist_max_m)
    {
        if (!(separation_m > 0.0) || !(lambda_m > 0.0))
            throw std::invalid_argument("separation and wavelength must be positive");
        if (!(dist_min_m > 0.0) || !(dist_min_m < dist_max_m))
            throw std::invalid_argument("need 0 < dist_min < dist_max");

        const int big = std::max(m, n);
        const int small = std::min(m, n);
        const double d2m = separation_m * separation_m * big / lambda_m; // = p * D
        const double lo = dist_min_m * (1.0 - kRangeSlack);
        const double hi = dist_max_m * (1.0 + kRangeSlack);

        // Largest p that can still land in range bounds the enumeration.
        const int p_cap = static_cast<int>(std::floor(d2m / lo));
        std::vector<double> out;
        if (p_cap < 1)
            return out;
        for (int p : admissible_p(big, small, p_cap))
        {
            const double dist = d2m / p;
            if (dist >= lo && dist <= hi)
                out.push_back(dist);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    double shifted_distance(double sep_from_m, double sep_to_m, double dist_from_m)
    {
        if (!(sep_from_m > 0.0) || !(sep_to_m > 0.0) || !(dist_from_m > 0.0))
            throw std::invalid_argument("separations and distance must be positive");
        const double ratio = sep_to_m / sep_from_m;
        return dist_from_m * ratio * ratio;
    }
}
