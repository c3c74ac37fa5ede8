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

#ifndef EXUNITS_GALOIS4_HPP
#define EXUNITS_GALOIS4_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "exunits/poly.hpp"

namespace exunits {

/// Transitive subgroups of S4.
enum class GaloisClass { S4, A4, D4, C4, V };

std::string_view to_string(GaloisClass g);
GaloisClass parse_galois_class(std::string_view name);

/// Cycle type written as its parts in ascending order: "1111", "112", "22", "13", "4".
using CycleType = std::string;

/// Cycle types that occur in the given transitive subgroup of S4.
const std::set<CycleType>& cycle_types(GaloisClass g);

/// R3(x) = x^3 - b x^2 + (ac - 4d) x - (a^2 d + c^2 - 4bd) for x^4 + ax^3 + bx^2 + cx + d.
IntPoly resolvent_cubic(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

/// Everything the table lookup looked at, for reports.
struct QuarticGaloisData {
    GaloisClass group = GaloisClass::S4;
    Integer discriminant;
    bool discriminant_is_square = false;
    IntPoly resolvent;
    std::vector<Integer> resolvent_roots;
    // Only set in the D4 / C4 branch.
    std::optional<Integer> first_product;   // (a^2 - 4(b - r)) * disc
    std::optional<Integer> second_product;  // (r^2 - 4d) * disc
};

/// Classifies the Galois group of an irreducible monic integer quartic from
/// the square class of its discriminant and the rational roots of its
/// resolvent cubic. Throws std::invalid_argument on reducible or malformed
/// input and ContradictionError if the tables are violated.
QuarticGaloisData classify_quartic_detailed(const IntPoly& p);
GaloisClass classify_quartic(const IntPoly& p);

struct CycleTypeProfile {
    std::map<CycleType, int> observed;
    std::vector<std::uint32_t> primes_used;
    std::vector<std::uint32_t> primes_skipped;  // divide the discriminant
};

inline constexpr std::uint32_t kDefaultFrobeniusBound = 500;

/// Factorization pattern of p modulo every prime up to prime_bound that does
/// not divide disc(p). Requires a monic squarefree quartic and prime_bound >= 20.
CycleTypeProfile frobenius_profile(const IntPoly& p, std::uint32_t prime_bound = kDefaultFrobeniusBound);

/// The smallest group whose cycle types cover everything observed, or nullopt
/// when that is not unique. Needs at least 20 usable primes.
std::optional<GaloisClass> classify_by_frobenius(const CycleTypeProfile& profile);

/// True if every observed cycle type occurs in g.
bool profile_consistent_with(const CycleTypeProfile& profile, GaloisClass g);

}  // namespace exunits

#endif
