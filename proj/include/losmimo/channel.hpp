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

#include <armadillo>
#include <complex>
#include <string>

#include "losmimo/geometry.hpp"

namespace losmimo
{
    // Round speed of light. Deliberately 3e8 rather than the CODATA value:
    // carrier-derived wavelengths then come out at the usual textbook
    // numerology (28 GHz -> 3/280 m). Overridable in the factories below.
    inline constexpr double kSpeedOfLight = 3.0e8;

    struct Wavelength
    {
        double meters = 0.0;

        static Wavelength from_meters(double lambda_m);
        static Wavelength from_frequency_hz(double f_hz, double c = kSpeedOfLight);
        static Wavelength from_frequency_ghz(double f_ghz, double c = kSpeedOfLight);
    };

    enum class PathModel
    {
        exact,      // per-pair Euclidean ray lengths
        approximate // first-order Taylor path lengths
    };

    // Normalized LOS channel: entry (m, n) = exp(j 2*pi r_{m,n} / lambda),
    // with r_{m,n} the path length from Tx antenna n to Rx antenna m under
    // the selected model. Every entry has unit modulus, so tr(H^H H) = M*N.
    struct ChannelMatrix
    {
        arma::cx_mat entries; // M x N
        PathModel model = PathModel::exact;
        Wavelength wavelength;
        LinkGeometry geometry;
        std::string warning; // far-field advisory for the approximate model, empty if none
    };

    ChannelMatrix build_channel(const LinkGeometry &geom, Wavelength wl, PathModel model);

    // H^H H (N x N, Hermitian, diagonal = M).
    arma::cx_mat gram_matrix(const ChannelMatrix &h);

    // Normalized separation product
    //   delta = d_tx d_rx cos(theta_tx) cos(theta_rx) / (lambda R).
    // Columns of H are orthogonal iff delta = p/M for an admissible integer p.
    double normalized_separation(const LinkGeometry &geom, Wavelength wl);

    // Column inner product h_k^H h_l of the approximate-model channel in
    // closed form, via the finite geometric series:
    //   Gamma * (1 - e^{j 2 pi delta M (k-l)}) / (1 - e^{j 2 pi delta (k-l)})
    // where Gamma = exp(j 2 pi gamma / lambda) collects the m-independent
    // phase. When the denominator vanishes (delta*(k-l) integer) the
    // degenerate limit Gamma * M is returned. Column indices are 0-based and
    // must differ.
    std::complex<double> inner_product_closed_form(const LinkGeometry &geom, Wavelength wl,
                                                   int col_k, int col_l);
}
