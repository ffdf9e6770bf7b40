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

#include "losmimo/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace losmimo
{
    EigenSpectrum make_spectrum(std::vector<double> values)
    {
        for (double v : values)
        {
            if (!std::isfinite(v))
                throw std::invalid_argument("eigenvalues must be finite");
            if (v < -1e-10)
                throw std::invalid_argument("eigenvalue below the -1e-10 roundoff floor; "
                                            "input is not a PSD spectrum");
        }

        std::sort(values.begin(), values.end(), std::greater<>());
        for (double &v : values)
            v = std::max(v, 0.0);

        EigenSpectrum spec;
        spec.trace = std::accumulate(values.begin(), values.end(), 0.0);
        const double floor = values.empty() ? 0.0 : kRankTol * values.front();
        spec.numerical_rank = static_cast<int>(
            std::count_if(values.begin(), values.end(), [&](double v) { return v > floor && v > 0.0; }));
        spec.values = std::move(values);
        return spec;
    }

    EigenSpectrum eigen_spectrum(const ChannelMatrix &h)
    {
        const arma::cx_mat &H = h.entries;
        // The two Gram forms share their nonzero spectrum; diagonalize the
        // smaller one.
        arma::cx_mat gram = (H.n_rows <= H.n_cols) ? arma::cx_mat(H * H.t())
                                                   : arma::cx_mat(H.t() * H);
        gram = 0.5 * (gram + gram.t()); // scrub roundoff asymmetry

        arma::vec eigs;
        if (!arma::eig_sym(eigs, gram))
            throw computation_error("Hermitian eigensolver failed on the Gram matrix");

        return make_spectrum(arma::conv_to<std::vector<double>>::from(eigs));
    }

    CapacityResult waterfill_capacity(const EigenSpectrum &spec, double snr_db)
    {
        if (!std::isfinite(snr_db))
            throw std::invalid_argument("snr_db must be finite");

        CapacityResult out;
        out.snr_linear = std::pow(10.0, snr_db / 10.0);

        // Positive modes, strongest first (the spectrum is already sorted).
        std::vector<double> lams;
        for (double v : spec.values)
            if (v > 0.0)
                lams.push_back(v);
        if (lams.empty())
            return out;

        // Shrink the active set until the water level covers its weakest mode.
        std::size_t active = lams.size();
        double mu = 0.0;
        while (active > 0)
        {
            double inv_sum = 0.0;
            for (std::size_t i = 0; i < active; ++i)
                inv_sum += 1.0 / (out.snr_linear * lams[i]);
            mu = (1.0 + inv_sum) / static_cast<double>(active);
            if (mu - 1.0 / (out.snr_linear * lams[active - 1]) >= 0.0)
                break;
            --active;
        }

        out.per_mode_power.assign(spec.values.size(), 0.0);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < spec.values.size() && idx < active; ++i)
        {
            if (spec.values[i] <= 0.0)
                continue;
            const double p = std::max(0.0, mu - 1.0 / (out.snr_linear * spec.values[i]));
            out.per_mode_power[i] = p;
            out.bits_per_s_per_hz += std::log2(1.0 + out.snr_linear * p * spec.values[i]);
            ++idx;
        }
        return out;
    }

    double equal_power_capacity(const EigenSpectrum &spec, double snr_db)
    {
        if (spec.values.empty())
            return 0.0;
        const double snr = std::pow(10.0, snr_db / 10.0);
        const double share = 1.0 / static_cast<double>(spec.values.size());
        double c = 0.0;
        for (double v : spec.values)
            c += std::log2(1.0 + snr * share * v);
        return c;
    }

    double condition_number(const EigenSpectrum &spec)
    {
        if (spec.values.empty() || spec.numerical_rank < static_cast<int>(spec.values.size()))
            return std::numeric_limits<double>::infinity();
        return spec.values.front() / spec.values.back();
    }

    double max_capacity_bound(int m_rx, int n_tx, double snr_db)
    {
        const double snr = std::pow(10.0, snr_db / 10.0);
        const double lo = static_cast<double>(std::min(m_rx, n_tx));
        const double hi = static_cast<double>(std::max(m_rx, n_tx));
        return lo * std::log2(1.0 + snr * hi / lo);
    }
}
