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
    struct Vec3
    {
        double x = 0.0, y = 0.0, z = 0.0;
    };

    Vec3 operator-(const Vec3 &a, const Vec3 &b);
    double norm(const Vec3 &v);
    double distance(const Vec3 &a, const Vec3 &b);

    // Two uniform linear arrays facing each other across a distance R.
    //
    // The first Tx antenna sits at the origin, the first Rx antenna at
    // (R, 0, 0). The Tx array lies in the xz-plane, tilted by theta_tx from
    // the z-axis; the Rx array is tilted by theta_rx from z' and rotated by
    // phi_rx around it. All lengths in meters, all angles in radians.
    struct LinkGeometry
    {
        int n_tx = 2;              // number of Tx antennas (N > 1)
        int m_rx = 2;              // number of Rx antennas (M > 1)
        double d_tx_m = 0.5;       // Tx antenna separation
        double d_rx_m = 0.5;       // Rx antenna separation
        double range_m = 10.0;     // R: first Tx antenna to first Rx antenna
        double theta_tx_rad = 0.0; // Tx tilt, in [0, pi/2]
        double theta_rx_rad = 0.0; // Rx tilt, in [0, pi/2]
        double phi_rx_rad = 0.0;   // Rx azimuth rotation
    };

    // Throws invalid_geometry if any field is out of range.
    void validate(const LinkGeometry &geom);

    double tx_aperture(const LinkGeometry &geom); // (N-1) * d_tx
    double rx_aperture(const LinkGeometry &geom); // (M-1) * d_rx
    double aperture(const LinkGeometry &geom);    // max of both

    // True when R >= multiple * aperture. The first-order path model assumes
    // the link distance is much larger than the array dimensions; 10x is used
    // as the advisory threshold since no hard cutoff exists.
    bool in_far_field(const LinkGeometry &geom, double multiple = 10.0);

    struct AntennaCoordinates
    {
        std::vector<Vec3> tx; // N positions, tx[0] = (0,0,0)
        std::vector<Vec3> rx; // M positions, rx[0] = (R,0,0)
    };

    // Antenna positions of both arrays. Validates the geometry.
    AntennaCoordinates antenna_coordinates(const LinkGeometry &geom);

    // Euclidean distance between Rx antenna rx_index and Tx antenna tx_index.
    // Antenna indices are 0-based; the reference antennas are index 0.
    // Throws std::out_of_range for bad indices.
    double path_length_exact(const LinkGeometry &geom, int rx_index, int tx_index);

    // First-order (Taylor) path length for the same antenna pair:
    //   R + m*d_rx*sin(t_rx)*cos(p_rx) + n*d_tx*sin(t_tx)
    //     + [ (m*d_rx*sin(t_rx)*sin(p_rx))^2
    //       + (m*d_rx*cos(t_rx) - n*d_tx*cos(t_tx))^2 ] / (2R)
    // with m = rx_index and n = tx_index (0-based). Intended for R much
    // larger than the array apertures.
    double path_length_approx(const LinkGeometry &geom, int rx_index, int tx_index);
}
