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

#ifndef EXUNITS_IRREDUCIBILITY_HPP
#define EXUNITS_IRREDUCIBILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exunits/poly.hpp"

namespace exunits {

enum class IrreducibilityStatus { irreducible_proven, reducible_with_witness, inconclusive };

/// Outcome of an irreducibility check over Q. When reducible, `factors`
/// multiply back to the input exactly.
struct IrreducibilityVerdict {
    IrreducibilityStatus status = IrreducibilityStatus::inconclusive;
    std::vector<IntPoly> factors;
    std::string criterion;

    bool proven() const noexcept { return status == IrreducibilityStatus::irreducible_proven; }
};

enum class PerronCase { case_i, case_ii, not_applicable };

std::string_view to_string(IrreducibilityStatus s);
std::string_view to_string(PerronCase c);

/// All rational roots, ascending, each confirmed by exact evaluation.
std::vector<Rational> rational_roots(const IntPoly& p);

/// Complete decision for monic integer quartics: rational roots, then every
/// split into monic integer quadratics over divisor pairs of the constant term.
IrreducibilityVerdict quartic_irreducible(const IntPoly& p);

/// Perron's criterion on x^n + a1 x^(n-1) + ... + an; a1 is the x^(n-1) coefficient.
PerronCase perron_check(const IntPoly& p);

bool irreducible_mod_p(const IntPoly& p, std::uint32_t prime);

/// Exhaustive search for a monic integer quadratic factor of a monic p with
/// p(0) != 0, using the Cauchy root bound to limit the linear coefficient.
std::optional<IntPoly> find_monic_quadratic_factor(const IntPoly& p);

/// Best available evidence for any nonconstant integer polynomial: the
/// quartic decision procedure, exhaustive splitting up to degree 5, then
/// Perron and mod-p irreducibility for higher degrees.
IrreducibilityVerdict irreducibility_evidence(const IntPoly& p);

}  // namespace exunits

#endif
