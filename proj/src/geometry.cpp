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

#include "losmimo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace losmimo
{
    Vec3 operator-(const Vec3 &a, const Vec3 &b)
    {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }

    double norm(const Vec3 &v)
    {
        return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    }

    double distance(const Vec3 &a, const Vec3 &b)
    {
        return norm(a - b);
    }

    void validate(const LinkGeometry &geom)
    {
        constexpr double half_pi = std::numbers::pi / 2.0;

        if (geom.n_tx < 2)
            throw invalid_geometry("n_tx must be at least 2, got " + std::to_string(geom.n_tx));
        if (geom.m_rx < 2)
            throw invalid_geometry("m_rx must be at least 2, got " + std::to_string(geom.m_rx));
        if (!(geom.d_tx_m > 0.0) || !std::isfinite(geom.d_tx_m))
            throw invalid_geometry("d_tx_m must be positive and finite");
        if (!(geom.d_rx_m > 0.0) || !std::isfinite(geom.d_rx_m))
            throw invalid_geometry("d_rx_m must be positive and finite");
        if (!(geom.range_m > 0.0) || !std::isfinite(geom.range_m))
            throw invalid_geometry("range_m must be positive and finite");
        if (!(geom.theta_tx_rad >= 0.0 && geom.theta_tx_rad <= half_pi))
            throw invalid_geometry("theta_tx_rad must lie in [0, pi/2]");
        if (!(geom.theta_rx_rad >= 0.0 && geom.theta_rx_rad <= half_pi))
            throw invalid_geometry("theta_rx_rad must lie in [0, pi/2]");
        if (!std::isfinite(geom.phi_rx_rad))
            throw invalid_geometry("phi_rx_rad must be finite");
    }

    double tx_aperture(const LinkGeometry &geom)
    {
        return (geom.n_tx - 1) * geom.d_tx_m;
    }

    double rx_aperture(const LinkGeometry &geom)
    {
        return (geom.m_rx - 1) * geom.d_rx_m;
    }

    double aperture(const LinkGeometry &geom)
    {
        return std::max(tx_aperture(geom), rx_aperture(geom));
    }

    bool in_far_field(const LinkGeometry &geom, double multiple)
    {
        return geom.range_m >= multiple * aperture(geom);
    }

    static void check_indices(const LinkGeometry &geom, int rx_index, int tx_index)
    {
        if (rx_index < 0 || rx_index >= geom.m_rx)
            throw std::out_of_range("rx_index " + std::to_string(rx_index) +
                                    " out of range [0, " + std::to_string(geom.m_rx) + ")");
        if (tx_index < 0 || tx_index >= geom.n_tx)
            throw std::out_of_range("tx_index " + std::to_string(tx_index) +
                                    " out of range [0, " + std::to_string(geom.n_tx) + ")");
    }

    static Vec3 tx_position(const LinkGeometry &geom, int n)
    {
        const double step = n * geom.d_tx_m;
        return {-step * std::sin(geom.theta_tx_rad), 0.0, step * std::cos(geom.theta_tx_rad)};
    }

    static Vec3 rx_position(const LinkGeometry &geom, int m)
    {
        const double step = m * geom.d_rx_m;
        const double st = std::sin(geom.theta_rx_rad);
        return {geom.range_m + step * st * std::cos(geom.phi_rx_rad),
                step * st * std::sin(geom.phi_rx_rad),
                step * std::cos(geom.theta_rx_rad)};
    }

    AntennaCoordinates antenna_coordinates(const LinkGeometry &geom)
    {
        validate(geom);

        AntennaCoordinates out;
        out.tx.reserve(geom.n_tx);
        out.rx.reserve(geom.m_rx);
        for (int n = 0; n < geom.n_tx; ++n)
            out.tx.push_back(tx_position(geom, n));
        for (int m = 0; m < geom.m_rx; ++m)
            out.rx.push_back(rx_position(geom, m));
        return out;
    }

    double path_length_exact(const LinkGeometry &geom, int rx_index, int tx_index)
    {
        validate(geom);
        check_indices(geom, rx_index, tx_index);
        return distance(rx_position(geom, rx_index), tx_position(geom, tx_index));
    }

    double path_length_approx(const LinkGeometry &geom, int rx_index, int tx_index)
    {
        validate(geom);
        check_indices(geom, rx_index, tx_index);

        const double m_step = rx_index * geom.d_rx_m;
        const double n_step = tx_index * geom.d_tx_m;
        const double lateral = m_step * std::sin(geom.theta_rx_rad);

        const double along = geom.range_m + lateral * std::cos(geom.phi_rx_rad) +
                             n_step * std::sin(geom.theta_tx_rad);
        const double off_y = lateral * std::sin(geom.phi_rx_rad);
        const double off_z = m_step * std::cos(geom.theta_rx_rad) -
                             n_step * std::cos(geom.theta_tx_rad);

        return along + (off_y * off_y + off_z * off_z) / (2.0 * geom.range_m);
    }
}
