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

#include "losmimo/channel.hpp"

#include <cmath>
#include <numbers>

namespace losmimo
{
    namespace
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;

        // Distance of x to the nearest integer, in [-0.5, 0.5]. Phases of
        // exp(j 2 pi x) are reduced through this before calling the libm
        // trig functions; x can reach ~1e5 turns and the unreduced argument
        // would lose precision we rely on elsewhere.
        double frac(double x)
        {
            return x - std::round(x);
        }

        std::complex<double> unit_phasor(double turns)
        {
            return std::polar(1.0, two_pi * frac(turns));
        }
    }

    Wavelength Wavelength::from_meters(double lambda_m)
    {
        if (!(lambda_m > 0.0) || !std::isfinite(lambda_m))
            throw std::invalid_argument("wavelength must be positive and finite");
        return {lambda_m};
    }

    Wavelength Wavelength::from_frequency_hz(double f_hz, double c)
    {
        if (!(f_hz > 0.0) || !std::isfinite(f_hz))
            throw std::invalid_argument("carrier frequency must be positive and finite");
        if (!(c > 0.0))
            throw std::invalid_argument("speed of light must be positive");
        return {c / f_hz};
    }

    Wavelength Wavelength::from_frequency_ghz(double f_ghz, double c)
    {
        return from_frequency_hz(f_ghz * 1.0e9, c);
    }

    ChannelMatrix build_channel(const LinkGeometry &geom, Wavelength wl, PathModel model)
    {
        validate(geom);
        if (!(wl.meters > 0.0) || !std::isfinite(wl.meters))
            throw std::invalid_argument("wavelength must be positive and finite");

        ChannelMatrix out;
        out.model = model;
        out.wavelength = wl;
        out.geometry = geom;
        out.entries.set_size(geom.m_rx, geom.n_tx);

        for (int n = 0; n < geom.n_tx; ++n)
        {
            for (int m = 0; m < geom.m_rx; ++m)
            {
                const double r = (model == PathModel::exact)
                                     ? path_length_exact(geom, m, n)
                                     : path_length_approx(geom, m, n);
                out.entries(m, n) = unit_phasor(r / wl.meters);
            }
        }

        if (model == PathModel::approximate && !in_far_field(geom))
            out.warning = "approximate path model used with R < 10x array aperture; "
                          "first-order path lengths may be inaccurate";

        return out;
    }

    arma::cx_mat gram_matrix(const ChannelMatrix &h)
    {
        return h.entries.t() * h.entries;
    }

    double normalized_separation(const LinkGeometry &geom, Wavelength wl)
    {
        return geom.d_tx_m * geom.d_rx_m * std::cos(geom.theta_tx_rad) *
               std::cos(geom.theta_rx_rad) / (wl.meters * geom.range_m);
    }

    std::complex<double> inner_product_closed_form(const LinkGeometry &geom, Wavelength wl,
                                                   int col_k, int col_l)
    {
        validate(geom);
        if (col_k < 0 || col_k >= geom.n_tx || col_l < 0 || col_l >= geom.n_tx)
            throw std::out_of_range("column index out of range");
        if (col_k == col_l)
            throw std::invalid_argument("column indices must differ (diagonal entries equal M)");
        if (!(wl.meters > 0.0))
            throw std::invalid_argument("wavelength must be positive");

        const double k = static_cast<double>(col_k);
        const double l = static_cast<double>(col_l);
        const double cos_tx = std::cos(geom.theta_tx_rad);

        // m-independent phase of r_{m,l} - r_{m,k}. Note the quadratic term
        // enters with a plus sign: it is (l^2 - k^2) d_tx^2 cos^2(t) / (2R)
        // straight from the first-order path-length expansion.
        const double gamma = (l - k) * geom.d_tx_m * std::sin(geom.theta_tx_rad) +
                             (l * l - k * k) * geom.d_tx_m * geom.d_tx_m * cos_tx * cos_tx /
                                 (2.0 * geom.range_m);
        const std::complex<double> big_gamma = unit_phasor(gamma / wl.meters);

        const double delta = normalized_separation(geom, wl);
        const double diff = k - l;
        const double m_rx = static_cast<double>(geom.m_rx);

        const std::complex<double> den = 1.0 - unit_phasor(delta * diff);
        if (std::abs(den) < 1e-12)
            return big_gamma * m_rx; // all M phasors aligned: degenerate geometric sum

        const std::complex<double> num = 1.0 - unit_phasor(delta * m_rx * diff);
        return big_gamma * num / den;
    }
}
