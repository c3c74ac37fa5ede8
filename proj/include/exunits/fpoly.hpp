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

#ifndef EXUNITS_FPOLY_HPP
#define EXUNITS_FPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "exunits/poly.hpp"

namespace exunits::fp {

/// Polynomial over the prime field F_p, ascending coefficients in [0, p).
/// The modulus is carried alongside rather than inside.
using Poly = std::vector<std::uint64_t>;

Poly reduce(const IntPoly& f, std::uint32_t p);
int degree(const Poly& f);

Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly rem(const Poly& a, const Poly& m, std::uint32_t p);
Poly quo(const Poly& a, const Poly& m, std::uint32_t p);
Poly gcd(const Poly& a, const Poly& b, std::uint32_t p);
Poly derivative(const Poly& f, std::uint32_t p);

bool is_squarefree(const Poly& f, std::uint32_t p);

/// Degrees of the irreducible factors of a squarefree f (distinct-degree
/// factorization), ascending; nullopt when f is not squarefree mod p.
std::optional<std::vector<int>> factor_degrees(const Poly& f, std::uint32_t p);

}  // namespace exunits::fp

#endif
