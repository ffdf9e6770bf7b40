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

#include <nlohmann/json_fwd.hpp>
#include <span>
#include <string>
#include <vector>

#include "losmimo/design.hpp"

namespace losmimo
{
    // Locale-independent decimal formatting (std::to_chars), general format
    // with the given significant digits. All CSV/JSON output goes through
    // this so identical invocations produce identical bytes.
    std::string format_double(double value, int precision = 9);

    // distance_m,eig1,...,eigK,rank
    std::string eigs_csv(std::span<const ProfilePoint> profile);

    // distance_m,capacity_bps_hz,max_capacity_bps_hz
    std::string capacity_csv(std::span<const ProfilePoint> profile, double max_capacity_bps_hz);

    // distance_m,capacity_bps_hz,eig1,...,eigK,rank -- the full per-candidate
    // profile behind the design report.
    std::string profile_csv(std::span<const ProfilePoint> profile);

    // p,asp_m2,d_equal_m,within_length_limit
    std::string asp_table_csv(const AspSolutionSet &solutions,
                              double length_max_tx_m, double length_max_rx_m);

    // distance_m,d_p1,d_p2,...  equal separations per admissible p over a
    // distance sweep (the d-vs-D curve family).
    std::string separations_csv(std::span<const double> distances,
                                std::span<const int> admissible,
                                double lambda_m, int m_antennas);

    nlohmann::ordered_json design_report_json(const DesignReport &report);
    nlohmann::ordered_json channel_json(const ChannelMatrix &h);
}
