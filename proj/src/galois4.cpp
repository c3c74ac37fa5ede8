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

#include "exunits/galois4.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "exunits/fpoly.hpp"
#include "exunits/irreducibility.hpp"

namespace exunits {

std::string_view to_string(GaloisClass g) {
    switch (g) {
        case GaloisClass::S4: return "S4";
        case GaloisClass::A4: return "A4";
        case GaloisClass::D4: return "D4";
        case GaloisClass::C4: return "C4";
        case GaloisClass::V: return "V";
    }
    return "?";
}

GaloisClass parse_galois_class(std::string_view name) {
    for (auto g : {GaloisClass::S4, GaloisClass::A4, GaloisClass::D4, GaloisClass::C4, GaloisClass::V}) {
        if (to_string(g) == name) return g;
    }
    throw std::invalid_argument("unknown Galois class '" + std::string(name) + "'");
}

const std::set<CycleType>& cycle_types(GaloisClass g) {
    static const std::set<CycleType> s4{"1111", "112", "22", "13", "4"};
    static const std::set<CycleType> a4{"1111", "22", "13"};
    static const std::set<CycleType> d4{"1111", "112", "22", "4"};
    static const std::set<CycleType> c4{"1111", "22", "4"};
    static const std::set<CycleType> v4{"1111", "22"};
    switch (g) {
        case GaloisClass::S4: return s4;
        case GaloisClass::A4: return a4;
        case GaloisClass::D4: return d4;
        case GaloisClass::C4: return c4;
        case GaloisClass::V: return v4;
    }
    throw std::logic_error("cycle_types: bad enum");
}

IntPoly resolvent_cubic(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    return IntPoly{Integer(-(a * a * d + c * c - 4 * b * d)), Integer(a * c - 4 * d), Integer(-b), Integer(1)};
}

QuarticGaloisData classify_quartic_detailed(const IntPoly& p) {
    if (p.degree() != 4 || !p.is_monic()) {
        throw std::invalid_argument("classify_quartic: expected a monic quartic");
    }
    if (!quartic_irreducible(p).proven()) {
        throw std::invalid_argument("classify_quartic: polynomial is reducible over Q");
    }
    const Integer& a = p[3];
    const Integer& b = p[2];
    const Integer& c = p[1];
    const Integer& d = p[0];

    QuarticGaloisData out;
    out.discriminant = discriminant(p);
    out.discriminant_is_square = is_square(out.discriminant);
    out.resolvent = resolvent_cubic(a, b, c, d);
    for (const auto& r : rational_roots(out.resolvent)) {
        // monic integer cubic: rational roots are integers
        out.resolvent_roots.push_back(r.get_num());
    }

    const auto nroots = out.resolvent_roots.size();
    if (nroots == 0) {
        out.group = out.discriminant_is_square ? GaloisClass::A4 : GaloisClass::S4;
        return out;
    }
    if (nroots == 3 || out.discriminant_is_square) {
        if (nroots == 3 && out.discriminant_is_square) {
            out.group = GaloisClass::V;
            return out;
        }
        throw ContradictionError("classify_quartic: resolvent splitting (" + std::to_string(nroots) +
                                 " rational roots) disagrees with the discriminant square class");
    }
    if (nroots != 1) {
        throw ContradictionError("classify_quartic: resolvent of an irreducible quartic has a repeated root");
    }
    const Integer& r = out.resolvent_roots.front();
    out.first_product = (a * a - 4 * (b - r)) * out.discriminant;
    out.second_product = (r * r - 4 * d) * out.discriminant;
    const bool both_square = is_square(*out.first_product) && is_square(*out.second_product);
    out.group = both_square ? GaloisClass::C4 : GaloisClass::D4;
    return out;
}

GaloisClass classify_quartic(const IntPoly& p) { return classify_quartic_detailed(p).group; }

CycleTypeProfile frobenius_profile(const IntPoly& p, std::uint32_t prime_bound) {
    if (prime_bound < 20) throw std::invalid_argument("frobenius_profile: prime bound must be at least 20");
    if (p.degree() != 4 || !p.is_monic()) {
        throw std::invalid_argument("frobenius_profile: expected a monic quartic");
    }
    const Integer disc = discriminant(p);
    if (disc == 0) throw std::invalid_argument("frobenius_profile: polynomial is not squarefree");
    CycleTypeProfile profile;
    for (std::uint32_t q : primes_up_to(prime_bound)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), q)) {
            profile.primes_skipped.push_back(q);
            continue;
        }
        const auto degs = fp::factor_degrees(fp::reduce(p, q), q);
        if (!degs) throw ContradictionError("frobenius_profile: unramified prime with a repeated factor");
        CycleType type;
        for (int e : *degs) type += std::to_string(e);
        ++profile.observed[type];
        profile.primes_used.push_back(q);
    }
    return profile;
}

bool profile_consistent_with(const CycleTypeProfile& profile, GaloisClass g) {
    const auto& types = cycle_types(g);
    return std::all_of(profile.observed.begin(), profile.observed.end(),
                       [&](const auto& kv) { return types.count(kv.first) > 0; });
}

std::optional<GaloisClass> classify_by_frobenius(const CycleTypeProfile& profile) {
    if (profile.primes_used.size() < 20) {
        throw std::invalid_argument("classify_by_frobenius: fewer than 20 usable primes");
    }
    constexpr std::array all{GaloisClass::S4, GaloisClass::A4, GaloisClass::D4, GaloisClass::C4, GaloisClass::V};
    std::vector<GaloisClass> candidates;
    for (auto g : all) {
        if (profile_consistent_with(profile, g)) candidates.push_back(g);
    }
    auto strictly_inside = [](GaloisClass small, GaloisClass big) {
        const auto& s = cycle_types(small);
        const auto& b = cycle_types(big);
        return s.size() < b.size() && std::includes(b.begin(), b.end(), s.begin(), s.end());
    };
    std::vector<GaloisClass> minimal;
    for (auto g : candidates) {
        const bool has_smaller = std::any_of(candidates.begin(), candidates.end(),
                                             [&](GaloisClass h) { return strictly_inside(h, g); });
        if (!has_smaller) minimal.push_back(g);
    }
    if (minimal.size() != 1) return std::nullopt;
    return minimal.front();
}

}  // namespace exunits
