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

#ifndef EXUNITS_REALROOTS_HPP
#define EXUNITS_REALROOTS_HPP

#include <vector>

#include "exunits/poly.hpp"

namespace exunits {

/// Invariants of a monic quartic x^4 + a x^3 + b x^2 + c x + 1.
struct QuarticInvariants {
    Integer delta;  // discriminant
    Integer dval;
    Integer pval;
};

/// Real embeddings r1 and complex-conjugate pairs r2 of a field generated by
/// a root of a squarefree polynomial of the given degree.
struct Signature {
    int r1 = 0;
    int r2 = 0;
    int degree() const noexcept { return r1 + 2 * r2; }
};

/// Sturm chain of a squarefree polynomial (p, p', -rem, ...), over Q.
std::vector<RatPoly> sturm_chain(const IntPoly& squarefree);

/// Number of distinct real roots, counted on (-B, B] with B the Cauchy bound.
int sturm_real_root_count(const IntPoly& p);

/// Signature read off the squarefree part of p.
Signature signature(const IntPoly& p);

QuarticInvariants quartic_invariants(const Integer& a, const Integer& b, const Integer& c);

/// Sufficient (not necessary) test for four distinct real roots.
bool all_real_sufficient(const QuarticInvariants& inv);

int unit_rank(const Signature& sig);

}  // namespace exunits

#endif
