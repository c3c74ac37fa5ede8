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

#ifndef EXUNITS_MONODISC_HPP
#define EXUNITS_MONODISC_HPP

#include <optional>
#include <string>
#include <vector>

#include "exunits/families.hpp"
#include "exunits/poly.hpp"

namespace exunits {

/// Discriminant of a one-parameter family as a polynomial in t.
struct DiscInT {
    IntPoly poly;  // variable t
    FamilySpec family;  // params exclude the free (last) parameter
    int degree_bound_used = 0;
    std::vector<Integer> verification_points;
};

/// Interpolates t -> disc(make_family(id, fixed..., t)) exactly. The
/// coefficients of these families are at most linear in t, so a degree-n
/// member has a discriminant of t-degree at most 2n - 2; the bound used is
/// 2n - 1 and 2*bound + 2 samples are taken at t = 0, 1, ...; five fresh
/// negative points are checked afterwards. Throws ContradictionError when
/// the samples do not fit the bound.
DiscInT disc_in_t(FamilyId id, const std::vector<Integer>& fixed = {});

/// Newton interpolation through (xs[i], ys[i]); the result must have integer coefficients.
IntPoly interpolate_integer(const std::vector<Integer>& xs, const std::vector<Integer>& ys);

/// Squarefree part of the discriminant polynomial in Z[t].
IntPoly reduced_disc(const DiscInT& dt);

enum class KonigOutcome { pass, fail, inconclusive };
std::string_view to_string(KonigOutcome k);

struct KonigFactorInfo {
    IntPoly factor;
    bool degree_at_most_3 = false;
    std::optional<bool> irreducible;  // certified for degree <= 3 via rational roots
};

struct KonigReport {
    KonigOutcome condition_i = KonigOutcome::inconclusive;
    KonigOutcome condition_ii = KonigOutcome::inconclusive;
    std::string detail_i;
    std::vector<KonigFactorInfo> factors;
    std::vector<std::pair<Integer, Integer>> samples;  // (t, dred(t))
    Integer sample_gcd;
    std::vector<Integer> common_primes;  // primes dividing every sampled value

    bool passed() const {
        return condition_i == KonigOutcome::pass && condition_ii == KonigOutcome::pass;
    }
};

/// Checks the two hypotheses of Koenig's monogenicity lemma on a reduced
/// discriminant: (i) no irreducible factor of degree >= 4, certified by a
/// supplied factorization into pieces of degree <= 3; (ii) no prime divides
/// every value, certified by a gcd of 1 over t = 0..max(sample_range, 50).
/// Throws std::invalid_argument if the candidate factors do not multiply to dred.
KonigReport konig_check(const IntPoly& dred, const std::vector<IntPoly>& candidate_factors, int sample_range);

}  // namespace exunits

#endif
