/*
   Copyright 2026 The exunits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EXUNITS_QUADSUB_HPP
#define EXUNITS_QUADSUB_HPP

#include <cstdint>
#include <vector>

#include "exunits/families.hpp"
#include "exunits/integer.hpp"

namespace exunits {

/// t^2 - d s^2 = 4 with t >= 3, s >= 1.
struct Pell4Solution {
    Integer d;
    Integer t;
    Integer s;
};

inline constexpr std::uint64_t kPellStepLimit = 10'000'000;

/// Smallest t >= 3 with t^2 - 4 = d s^2. Uses the continued fraction of
/// sqrt(d); small d go through a direct search instead. Throws
/// std::runtime_error when more than max_steps candidates would be needed.
Pell4Solution pell4_solve(const Integer& d, std::uint64_t max_steps = kPellStepLimit);

/// The direct search over t = 3, 4, ... on its own.
Pell4Solution pell4_search(const Integer& d, std::uint64_t max_steps = kPellStepLimit);

/// The member of family f whose quartic field contains Q(sqrt d).
FamilySpec embed_quadratic(const Integer& d);

/// T = t^2 - 2; checks that T^2 - 4 and t^2 - 4 have the same squarefree part.
Integer tower_step(const Integer& t);

struct AppendixScan {
    std::vector<Integer> hits;        // t in [3, bound] with (t^2-4)(4t^2+9) a square
    std::vector<Integer> small_hits;  // the same test for |t| < 3
};

AppendixScan appendix_scan(std::uint64_t bound);

}  // namespace exunits

#endif
