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

#include "losmimo/channel.hpp"

namespace losmimo
{
    // Eigenvalues below kRankTol * lambda_max do not count towards the
    // numerical rank.
    inline constexpr double kRankTol = 1e-6;

    struct EigenSpectrum
    {
        std::vector<double> values; // descending, clipped at 0
        double trace = 0.0;         // sum of values; M*N for a unit-modulus channel
        int numerical_rank = 0;     // count of values > kRankTol * max
    };

    // Normalizes a raw eigenvalue list: sorts descending, clips small
    // negative roundoff at zero, fills trace and numerical rank.
    EigenSpectrum make_spectrum(std::vector<double> values);

    // Eigenvalues of H H^H (equal to the nonzero eigenvalues of H^H H),
    // computed from the smaller of the two Hermitian Gram forms. Size is
    // min(M, N). Solver failure raises computation_error.
    EigenSpectrum eigen_spectrum(const ChannelMatrix &h);

    struct CapacityResult
    {
        double bits_per_s_per_hz = 0.0;
        std::vector<double> per_mode_power; // per eigenvalue, sums to 1; empty if nothing allocated
        double snr_linear = 1.0;
    };

    // Water-filling over the eigenmodes with unit total power:
    //   C = sum_i log2(1 + snr * p_i * lambda_i),
    //   p_i = max(0, mu - 1/(snr * lambda_i)),  sum_i p_i = 1.
    // The SNR is the total receive SNR (path loss folded in). An all-zero
    // spectrum yields capacity 0 with an empty allocation.
    CapacityResult waterfill_capacity(const EigenSpectrum &spec, double snr_db);

    // Uniform power split over all modes, for comparison against the
    // water-filling allocation: C = sum_i log2(1 + snr * lambda_i / K).
    double equal_power_capacity(const EigenSpectrum &spec, double snr_db);

    // lambda_max / lambda_min over the numerically nonzero values;
    // +infinity when the spectrum is rank deficient.
    double condition_number(const EigenSpectrum &spec);

    // Capacity of the ideal orthogonal channel with the same antenna counts:
    // min(M,N) * log2(1 + snr * max(M,N) / min(M,N)). Upper bound for every
    // profile on a given link.
    double max_capacity_bound(int m_rx, int n_tx, double snr_db);
}
