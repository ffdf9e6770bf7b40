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

#include <string>
#include <vector>

namespace losmimo::verify
{
    struct CheckResult
    {
        std::string id;     // stable short id, e.g. "A4"
        std::string name;   // what the check asserts
        bool passed = false;
        std::string detail; // measured values / failure specifics
    };

    // The built-in regression suite against the published reference values
    // (28 GHz V2V link, SNR 13 dB). Deterministic: randomized checks use
    // fixed seeds. Checks are independent; all run regardless of failures.
    std::vector<CheckResult> run_reference_checks();

    // Run a single check by id ("A1".."A12"); throws std::invalid_argument
    // for unknown ids.
    CheckResult run_reference_check(const std::string &id);

    // Ids of all checks, in run order.
    std::vector<std::string> reference_check_ids();
}
