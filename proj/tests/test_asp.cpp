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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "losmimo/asp.hpp"
#include "losmimo/spectrum.hpp"

using namespace losmimo;

namespace
{
    constexpr double kLambda28 = 3.0 / 280.0;

    // Admissibility straight from the definition, with no divisor reasoning:
    // delta*M*q must be an integer and delta*q must not be, for q < N.
    bool admissible_by_definition(int p, int m, int n)
    {
        for (int q = 1; q < n; ++q)
        {
            if ((p * q) % m == 0) // delta*q = p*q/m integer: parallel columns
                return false;
        }
        return true; // numerator p*q always integer, so every q passes
    }
}

TEST_CASE("divisor sets from the worked examples")
{
    CHECK(divisor_set(3, 2).divisors == std::vector<int>{3});
    CHECK(divisor_set(3, 3).divisors == std::vector<int>{3});     // M prime
    CHECK(divisor_set(12, 4).divisors == std::vector<int>{4, 6, 12});
    CHECK(divisor_set(4, 4).divisors == std::vector<int>{2, 4});  // all divisors but 1
    CHECK(divisor_set(6, 4).divisors == std::vector<int>{2, 3, 6}); // threshold hit exactly
    CHECK(divisor_set(7, 4).divisors == std::vector<int>{7});
}

TEST_CASE("divisor set argument checking")
{
    CHECK_THROWS_AS(divisor_set(3, 4), swap_required);
    CHECK_THROWS_AS(divisor_set(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(divisor_set(1, 1), std::invalid_argument);
}

TEST_CASE("admissible p sequences")
{
    CHECK(admissible_p(3, 3, 8) == std::vector<int>{1, 2, 4, 5, 7, 8});
    CHECK(admissible_p(4, 3, 10) == std::vector<int>{1, 3, 5, 7, 9});
    CHECK(admissible_p(5, 2, 12) == std::vector<int>{1, 2, 3, 4, 6, 7, 8, 9, 11, 12});
    CHECK(admissible_p(3, 3, 1) == std::vector<int>{1});
    CHECK_THROWS_AS(admissible_p(3, 3, 0), std::invalid_argument);
}

TEST_CASE("orthogonality check on the three reference deltas")
{
    const auto ok = orthogonality_check(1.0 / 3.0, 3, 3);
    CHECK(ok.orthogonal);
    CHECK(ok.max_residual < 1e-9);

    const auto aligned = orthogonality_check(1.0, 3, 3);
    CHECK_FALSE(aligned.orthogonal);
    CHECK(std::isinf(aligned.max_residual));
    CHECK(aligned.worst_q == 1);

    // delta = 1/2: columns 1 and 3 become parallel via q = 2
    const auto half = orthogonality_check(0.5, 3, 3);
    CHECK_FALSE(half.orthogonal);
    CHECK(std::isinf(half.max_residual));
    CHECK(half.worst_q == 2);
}

TEST_CASE("orthogonality check rejects bad arguments")
{
    CHECK_THROWS_AS(orthogonality_check(0.0, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(orthogonality_check(-0.5, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(orthogonality_check(0.5, 1, 3), std::invalid_argument);
}

TEST_CASE("divisor rule equals the definition and the numerical check")
{
    // the module's primary correctness oracle
    for (int m = 2; m <= 24; ++m)
        for (int n = 2; n <= m; ++n)
        {
            const std::vector<int> adm = admissible_p(m, n, 100);
            const std::set<int> adm_set(adm.begin(), adm.end());
            for (int p = 1; p <= 100; ++p)
            {
                const bool divisor_based = adm_set.count(p) > 0;
                REQUIRE(divisor_based == admissible_by_definition(p, m, n));
                REQUIRE(divisor_based ==
                        orthogonality_check(double(p) / m, m, n).orthogonal);
            }
        }
}

TEST_CASE("conditions tighten as N grows")
{
    for (int m = 2; m <= 16; ++m)
        for (int n = 2; n < m; ++n)
        {
            const std::vector<int> wider = admissible_p(m, n, 60);
            const std::vector<int> tighter = admissible_p(m, n + 1, 60);
            CHECK(std::includes(wider.begin(), wider.end(), tighter.begin(), tighter.end()));
        }
}

TEST_CASE("N = 2 excludes exactly the multiples of M")
{
    for (int m = 2; m <= 16; ++m)
    {
        const std::vector<int> adm = admissible_p(m, 2, 100);
        const std::set<int> adm_set(adm.begin(), adm.end());
        for (int p = 1; p <= 100; ++p)
            CHECK(adm_set.count(p) == (p % m != 0 ? 1u : 0u));
    }
}

TEST_CASE("separation products for the 28 GHz link at 50 m")
{
    const AspLink link{kLambda28, 50.0, 0.0, 0.0};
    const AspSolutionSet sol = asp_solutions(link, 3, 3, 8);

    REQUIRE(sol.admissible_p == std::vector<int>{1, 2, 4, 5, 7, 8});
    CHECK_THAT(sol.asp_m2[0], Catch::Matchers::WithinAbs(0.178571, 1e-6));
    CHECK_THAT(sol.asp_m2[1], Catch::Matchers::WithinAbs(0.357143, 1e-6));
    // p = 2 product is the square of the quoted 0.5976 separation
    CHECK_THAT(std::sqrt(sol.asp_m2[1]), Catch::Matchers::WithinAbs(0.5976, 2e-4));
}

TEST_CASE("tilting both arrays by 60 degrees quadruples the products")
{
    const AspLink flat{kLambda28, 50.0, 0.0, 0.0};
    const AspLink tilted{kLambda28, 50.0, std::numbers::pi / 3.0, std::numbers::pi / 3.0};
    const AspSolutionSet a = asp_solutions(flat, 3, 3, 5);
    const AspSolutionSet b = asp_solutions(tilted, 3, 3, 5);
    REQUIRE(a.asp_m2.size() == b.asp_m2.size());
    for (std::size_t i = 0; i < a.asp_m2.size(); ++i)
        CHECK_THAT(b.asp_m2[i], Catch::Matchers::WithinRel(4.0 * a.asp_m2[i], 1e-12));
}

TEST_CASE("endfire arrays have no separation-product solution")
{
    const AspLink endfire{kLambda28, 50.0, std::numbers::pi / 2.0, 0.0};
    CHECK_THROWS_AS(asp_solutions(endfire, 3, 3, 5), no_solution);
}

TEST_CASE("interchanging transmitter and receiver leaves the solutions unchanged")
{
    const AspLink link{kLambda28, 80.0, 0.3, 0.1};
    const AspSolutionSet a = asp_solutions(link, 6, 4, 30);
    const AspSolutionSet b = asp_solutions(link, 4, 6, 30);
    CHECK(a.admissible_p == b.admissible_p);
    CHECK(a.asp_m2 == b.asp_m2);
}

TEST_CASE("equal separation: same d from three (p, D) pairs")
{
    const double d1 = equal_separation(2, kLambda28, 50.0, 3);
    const double d2 = equal_separation(1, kLambda28, 100.0, 3);
    const double d3 = equal_separation(4, kLambda28, 25.0, 3);
    CHECK_THAT(d1, Catch::Matchers::WithinAbs(0.5976, 2e-4));
    CHECK_THAT(d2, Catch::Matchers::WithinRel(d1, 1e-12));
    CHECK_THAT(d3, Catch::Matchers::WithinRel(d1, 1e-12));
    CHECK_THROWS_AS(equal_separation(0, kLambda28, 50.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(equal_separation(1, kLambda28, -5.0, 3), std::invalid_argument);
}

TEST_CASE("optimum distances of the quoted 0.5976 separation")
{
    const std::vector<double> got = optimal_distances(0.5976, kLambda28, 3, 3, 10.0, 100.0);
    const std::vector<double> want = {10.0, 12.5, 14.2857, 20.0, 25.0, 50.0, 100.0};
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
        CHECK_THAT(got[i], Catch::Matchers::WithinAbs(want[i], 0.01));

    // each returned distance satisfies the numerical orthogonality condition
    for (double dist : got)
        CHECK(orthogonality_check(0.5976 * 0.5976 / (kLambda28 * dist), 3, 3).orthogonal);
}

TEST_CASE("no optimum distance beyond the largest solution")
{
    CHECK(optimal_distances(0.5976, kLambda28, 3, 3, 200.0, 300.0).empty());
    CHECK_THROWS_AS(optimal_distances(0.5976, kLambda28, 3, 3, 100.0, 10.0),
                    std::invalid_argument);
}

TEST_CASE("round trip: equal_separation then optimal_distances recovers the anchor")
{
    const double anchor = 37.3;
    for (int p : admissible_p(3, 3, 20))
    {
        const double d = equal_separation(p, kLambda28, anchor, 3);
        const std::vector<double> dists = optimal_distances(d, kLambda28, 3, 3, 5.0, 400.0);
        const bool found = std::any_of(dists.begin(), dists.end(), [&](double dist) {
            return std::abs(dist - anchor) < 1e-9;
        });
        CHECK(found);
    }
}

TEST_CASE("channels built at returned optimum distances are orthogonal")
{
    const Wavelength wl = Wavelength::from_meters(kLambda28);
    const double d = equal_separation(2, kLambda28, 50.0, 3); // exact solution value
    for (double dist : optimal_distances(d, kLambda28, 3, 3, 10.0, 100.0))
    {
        LinkGeometry g;
        g.n_tx = 3;
        g.m_rx = 3;
        g.d_tx_m = d;
        g.d_rx_m = d;
        g.range_m = dist;

        const ChannelMatrix h = build_channel(g, wl, PathModel::approximate);
        const arma::cx_mat gram = gram_matrix(h);
        for (arma::uword r = 0; r < gram.n_rows; ++r)
            for (arma::uword c = 0; c < gram.n_cols; ++c)
                if (r != c)
                    CHECK(std::abs(gram(r, c)) < 1e-6 * g.m_rx);

        for (double v : eigen_spectrum(h).values)
            CHECK_THAT(v, Catch::Matchers::WithinAbs(3.0, 1e-6));
    }
}

TEST_CASE("shifted distance")
{
    CHECK(shifted_distance(0.5, 0.5, 42.0) == 42.0);
    CHECK_THAT(shifted_distance(0.5976, 0.7, 50.0), Catch::Matchers::WithinAbs(68.60, 0.05));
    CHECK_THAT(shifted_distance(0.4, 0.4 * std::numbers::sqrt2, 30.0),
               Catch::Matchers::WithinRel(60.0, 1e-12));
    CHECK_THROWS_AS(shifted_distance(0.0, 0.5, 42.0), std::invalid_argument);
}
