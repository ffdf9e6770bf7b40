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

#include <stdexcept>

namespace losmimo
{
    // Link parameters violate a structural requirement (antenna counts,
    // separations, distance or orientation angles out of range).
    class invalid_geometry : public std::invalid_argument
    {
      public:
        using std::invalid_argument::invalid_argument;
    };

    // Raised by the N <= M solution machinery when called with N > M;
    // the caller must interchange transmitter and receiver first.
    class swap_required : public std::invalid_argument
    {
      public:
        using std::invalid_argument::invalid_argument;
    };

    // The requested design has no solution (e.g. endfire arrays, where the
    // normalized separation product is identically zero).
    class no_solution : public std::domain_error
    {
      public:
        using std::domain_error::domain_error;
    };

    // A numerical routine failed; results would be unreliable.
    class computation_error : public std::runtime_error
    {
      public:
        using std::runtime_error::runtime_error;
    };
}
