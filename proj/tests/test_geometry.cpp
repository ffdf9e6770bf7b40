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

#include <cmath>
#include <numbers>
#include <random>

#include "losmimo/geometry.hpp"

using namespace losmimo;

namespace
{
    LinkGeometry broadside(int n, int m, double d, double range)
    {
        LinkGeometry g;
        g.n_tx = n;
        g.m_rx = m;
        g.d_tx_m = d;
        g.d_rx_m = d;
        g.range_m = range;
        return g;
    }

    LinkGeometry random_geometry(std::mt19937_64 &rng, bool with_angles = true)
    {
        std::uniform_int_distribution<int> counts(2, 6);
        std::uniform_real_distribution<double> sep(0.05, 1.0);
        std::uniform_real_distribution<double> range(5.0, 200.0);
        std::uniform_real_distribution<double> tilt(0.0, std::numbers::pi / 2.0);
        std::uniform_real_distribution<double> az(0.0, 2.0 * std::numbers::pi);

        LinkGeometry g;
        g.n_tx = counts(rng);
        g.m_rx = counts(rng);
        g.d_tx_m = sep(rng);
        g.d_rx_m = sep(rng);
        g.range_m = range(rng);
        if (with_angles)
        {
            g.theta_tx_rad = tilt(rng);
            g.theta_rx_rad = tilt(rng);
            g.phi_rx_rad = az(rng);
        }
        return g;
    }
}

TEST_CASE("broadside coordinates: vertical arrays at the reference positions")
{
    const auto coords = antenna_coordinates(broadside(2, 2, 1.0, 10.0));

    REQUIRE(coords.tx.size() == 2);
    REQUIRE(coords.rx.size() == 2);
    CHECK(coords.tx[0].x == 0.0);
    CHECK(coords.tx[0].y == 0.0);
    CHECK(coords.tx[0].z == 0.0);
    CHECK(coords.tx[1].z == 1.0);
    CHECK(coords.rx[0].x == 10.0);
    CHECK(coords.rx[0].y == 0.0);
    CHECK(coords.rx[0].z == 0.0);
    CHECK(coords.rx[1].x == 10.0);
    CHECK(coords.rx[1].z == 1.0);
}

TEST_CASE("coordinates for the three-element 28 GHz reference link")
{
    const auto coords = antenna_coordinates(broadside(3, 3, 0.5976, 50.0));
    CHECK_THAT(coords.tx[0].z, Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(coords.tx[1].z, Catch::Matchers::WithinAbs(0.5976, 1e-12));
    CHECK_THAT(coords.tx[2].z, Catch::Matchers::WithinAbs(1.1952, 1e-12));
}

TEST_CASE("endfire transmit array lies along -x")
{
    LinkGeometry g = broadside(2, 2, 0.7, 10.0);
    g.theta_tx_rad = std::numbers::pi / 2.0;
    const auto coords = antenna_coordinates(g);
    CHECK_THAT(coords.tx[1].x, Catch::Matchers::WithinAbs(-0.7, 1e-12));
    CHECK_THAT(coords.tx[1].y, Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(coords.tx[1].z, Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("reference antenna pair is exactly R apart")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i)
    {
        const LinkGeometry g = random_geometry(rng);
        CHECK(path_length_exact(g, 0, 0) == g.range_m);
        CHECK(path_length_approx(g, 0, 0) == g.range_m);
    }
}

TEST_CASE("exact path lengths from simple right triangles")
{
    LinkGeometry g = broadside(2, 2, 1.0, 10.0);
    CHECK_THAT(path_length_exact(g, 1, 0), Catch::Matchers::WithinRel(std::sqrt(101.0), 1e-15));

    const LinkGeometry v2v = broadside(3, 3, 0.5976, 50.0);
    CHECK_THAT(path_length_exact(v2v, 2, 0),
               Catch::Matchers::WithinRel(std::sqrt(50.0 * 50.0 + 1.1952 * 1.1952), 1e-15));
}

TEST_CASE("broadside approximation reduces to R + (m dRx - n dTx)^2 / 2R")
{
    const LinkGeometry g = broadside(4, 4, 0.31, 40.0);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
        {
            const double off = m * g.d_rx_m - n * g.d_tx_m;
            CHECK_THAT(path_length_approx(g, m, n),
                       Catch::Matchers::WithinRel(g.range_m + off * off / (2.0 * g.range_m), 1e-15));
        }
}

TEST_CASE("approximation error at the reference link is below 1e-6 relative")
{
    const LinkGeometry g = broadside(3, 3, 0.5976, 50.0);
    const double exact = path_length_exact(g, 2, 0);
    const double approx = path_length_approx(g, 2, 0);
    CHECK(std::abs(approx - exact) / exact < 1e-6);
}

TEST_CASE("broadside far-field error bound: < 1e-6 relative at R >= 25x aperture")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> counts(2, 6);
    std::uniform_real_distribution<double> sep(0.05, 1.0);
    std::uniform_real_distribution<double> mult(25.0, 200.0);

    double worst = 0.0;
    for (int i = 0; i < 300; ++i)
    {
        LinkGeometry g;
        g.n_tx = counts(rng);
        g.m_rx = counts(rng);
        g.d_tx_m = sep(rng);
        g.d_rx_m = sep(rng);
        g.range_m = aperture(g) * mult(rng);
        for (int m = 0; m < g.m_rx; ++m)
            for (int n = 0; n < g.n_tx; ++n)
            {
                const double exact = path_length_exact(g, m, n);
                worst = std::max(worst, std::abs(path_length_approx(g, m, n) - exact) / exact);
            }
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("approximation error decays with distance for tilted arrays")
{
    std::mt19937_64 rng(6);
    for (int i = 0; i < 50; ++i)
    {
        LinkGeometry g = random_geometry(rng);
        g.range_m = aperture(g) * 30.0;

        auto worst_rel = [](const LinkGeometry &geom) {
            double worst = 0.0;
            for (int m = 0; m < geom.m_rx; ++m)
                for (int n = 0; n < geom.n_tx; ++n)
                {
                    const double exact = path_length_exact(geom, m, n);
                    worst = std::max(worst,
                                     std::abs(path_length_approx(geom, m, n) - exact) / exact);
                }
            return worst;
        };

        const double near = worst_rel(g);
        LinkGeometry far = g;
        far.range_m *= 4.0;
        // residual shrinks at least quadratically in R
        if (near > 0.0)
            CHECK(worst_rel(far) < 0.1 * near);
    }
}

TEST_CASE("uniform spacing of both arrays")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i)
    {
        const LinkGeometry g = random_geometry(rng);
        const auto coords = antenna_coordinates(g);
        for (std::size_t k = 1; k < coords.tx.size(); ++k)
            CHECK_THAT(distance(coords.tx[k], coords.tx[k - 1]),
                       Catch::Matchers::WithinRel(g.d_tx_m, 1e-12));
        for (std::size_t k = 1; k < coords.rx.size(); ++k)
            CHECK_THAT(distance(coords.rx[k], coords.rx[k - 1]),
                       Catch::Matchers::WithinRel(g.d_rx_m, 1e-12));
    }
}

TEST_CASE("pairwise distances are invariant under rigid translation")
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> shift(-50.0, 50.0);
    for (int i = 0; i < 20; ++i)
    {
        const LinkGeometry g = random_geometry(rng);
        const auto coords = antenna_coordinates(g);
        const Vec3 t{shift(rng), shift(rng), shift(rng)};
        for (int m = 0; m < g.m_rx; ++m)
            for (int n = 0; n < g.n_tx; ++n)
            {
                const Vec3 rx{coords.rx[m].x + t.x, coords.rx[m].y + t.y, coords.rx[m].z + t.z};
                const Vec3 tx{coords.tx[n].x + t.x, coords.tx[n].y + t.y, coords.tx[n].z + t.z};
                CHECK_THAT(distance(rx, tx),
                           Catch::Matchers::WithinRel(path_length_exact(g, m, n), 1e-12));
            }
    }
}

TEST_CASE("geometry validation rejects out-of-range fields")
{
    LinkGeometry g = broadside(3, 3, 0.5, 50.0);

    g.n_tx = 1;
    CHECK_THROWS_AS(validate(g), invalid_geometry);
    g.n_tx = 3;

    g.m_rx = 0;
    CHECK_THROWS_AS(validate(g), invalid_geometry);
    g.m_rx = 3;

    g.d_tx_m = 0.0;
    CHECK_THROWS_AS(validate(g), invalid_geometry);
    g.d_tx_m = 0.5;

    g.range_m = -2.0;
    CHECK_THROWS_AS(validate(g), invalid_geometry);
    g.range_m = 50.0;

    g.theta_tx_rad = 2.0; // > pi/2
    CHECK_THROWS_AS(validate(g), invalid_geometry);
    g.theta_tx_rad = 0.0;

    g.theta_rx_rad = -0.1;
    CHECK_THROWS_AS(validate(g), invalid_geometry);
    g.theta_rx_rad = 0.0;

    CHECK_NOTHROW(validate(g));
}

TEST_CASE("path length index bounds")
{
    const LinkGeometry g = broadside(3, 4, 0.5, 50.0);
    CHECK_THROWS_AS(path_length_exact(g, 4, 0), std::out_of_range);
    CHECK_THROWS_AS(path_length_exact(g, 0, 3), std::out_of_range);
    CHECK_THROWS_AS(path_length_approx(g, -1, 0), std::out_of_range);
    CHECK_NOTHROW(path_length_exact(g, 3, 2));
}

TEST_CASE("far-field predicate uses the larger aperture")
{
    LinkGeometry g = broadside(3, 3, 0.5, 50.0); // aperture 1.0
    CHECK(in_far_field(g));                      // 50 >= 10
    g.range_m = 9.0;
    CHECK_FALSE(in_far_field(g));
    CHECK(in_far_field(g, 5.0));
    CHECK(tx_aperture(g) == 1.0);
    g.d_rx_m = 2.0;
    CHECK(rx_aperture(g) == 4.0);
    CHECK(aperture(g) == 4.0);
}
