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

#ifndef EXUNITS_FAMILIES_HPP
#define EXUNITS_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exunits/galois4.hpp"
#include "exunits/irreducibility.hpp"
#include "exunits/poly.hpp"

namespace exunits {

/// Polynomial families with exceptional-unit roots. The string ids returned by
/// to_string are part of the command-line and report formats.
enum class FamilyId {
    f,                 // x^4 - t x^3 - x^2 + t x + 1
    h,                 // x^4 - t x^3 - 3x^2 + t x + 1
    g,                 // x^n - (t+3) x^(n-1) + t x + 1, params (n, t)
    F,                 // x^n - (t1+...+t_{n-2}+3) x^(n-1) + t1 x^(n-2) + ... + t_{n-2} x + 1
    nagell_nonGalois,  // x^3 + (k-1) x^2 - k x - 1
    nagell_Galois,     // x^3 + k x^2 - (k+3) x + 1
    niklasch_smart,    // x^4 + a x^3 + x^2 + a x - 1
};

std::string_view to_string(FamilyId id);
FamilyId parse_family_id(std::string_view name);
const std::vector<FamilyId>& all_families();

struct FamilySpec {
    FamilyId id = FamilyId::f;
    std::vector<Integer> params;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws std::invalid_argument when the parameter count does not fit the family.
void check_arity(const FamilySpec& spec);

/// Exact coefficients for any integer parameters; ranges are not enforced here.
IntPoly make_family(const FamilySpec& spec);

/// Whether the parameters lie in the range where the family's claims are
/// asserted, and a human-readable statement of that range.
bool in_paper_range(const FamilySpec& spec);
std::string_view paper_range(FamilyId id);

enum class CheckStatus { pass, fail, not_applicable };
std::string_view to_string(CheckStatus s);
CheckStatus parse_check_status(std::string_view s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::not_applicable;
    std::string witness;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    FamilySpec spec;
    IntPoly polynomial;
    bool in_range = false;
    std::vector<CheckResult> checks;

    // Witness data gathered along the way.
    IrreducibilityVerdict irreducibility;
    std::optional<int> real_roots;
    std::optional<int> unit_rank;
    std::optional<GaloisClass> galois;
    std::optional<Integer> subfield_d;
    std::optional<int> exceptional_units;

    bool all_passed() const;
    const CheckResult* find(std::string_view name) const;
};

/// Claim names checked for a given family spec, in report order.
std::vector<std::string> claim_names(const FamilySpec& spec);

/// Runs the whole checklist for one family instance. Never throws for
/// mathematical failures; those become `fail` entries.
VerificationReport verify(const FamilySpec& spec);

/// verify() over consecutive values of the last parameter, spread over
/// worker threads; results come back in parameter order.
std::vector<VerificationReport> verify_sweep(FamilyId id, const std::vector<Integer>& fixed,
                                             const Integer& first, const Integer& last,
                                             unsigned workers = 0);

/// 3 * 7^(n + 2r + 2): upper bound for the number of exceptional units in a
/// degree-n field of unit rank r.
Integer evertse_bound(long n, long r);

}  // namespace exunits

#endif
