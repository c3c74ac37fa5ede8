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

#include "exunits/monodisc.hpp"

#include <algorithm>

#include "exunits/irreducibility.hpp"

namespace exunits {

IntPoly interpolate_integer(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolate_integer: bad sample sets");
    const std::size_t n = xs.size();
    // divided differences in place
    std::vector<Rational> coef(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            const Integer dx = xs[i] - xs[i - j];
            if (dx == 0) throw std::invalid_argument("interpolate_integer: repeated abscissa");
            coef[i] = (coef[i] - coef[i - 1]) / Rational(dx);
        }
    }
    RatPoly acc = RatPoly::constant(coef[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        acc = acc * RatPoly{Rational(-xs[k]), Rational(1)} + RatPoly::constant(coef[k]);
    }
    std::vector<Integer> out;
    for (const auto& c : acc.coeffs()) {
        if (c.get_den() != 1) throw ContradictionError("interpolate_integer: non-integral coefficient " + to_string(c));
        out.emplace_back(c.get_num());
    }
    return IntPoly(std::move(out));
}

DiscInT disc_in_t(FamilyId id, const std::vector<Integer>& fixed) {
    auto member = [&](const Integer& t) {
        FamilySpec spec{id, fixed};
        spec.params.push_back(t);
        return make_family(spec);
    };
    const int n = member(Integer(0)).degree();
    if (n < 1) throw std::invalid_argument("disc_in_t: family member is constant");
    DiscInT out;
    out.family = FamilySpec{id, fixed};
    out.degree_bound_used = 2 * n - 1;
    const int samples = 2 * out.degree_bound_used + 2;
    std::vector<Integer> xs, ys;
    for (int i = 0; i < samples; ++i) {
        xs.emplace_back(i);
        ys.push_back(discriminant(member(xs.back())));
    }
    out.poly = interpolate_integer(xs, ys);
    if (out.poly.degree() > out.degree_bound_used) {
        throw ContradictionError("disc_in_t: interpolant degree " + std::to_string(out.poly.degree()) +
                                 " exceeds the bound " + std::to_string(out.degree_bound_used));
    }
    for (int i = 1; i <= 5; ++i) {
        const Integer t(-i);
        if (evaluate(out.poly, t) != discriminant(member(t))) {
            throw ContradictionError("disc_in_t: interpolant disagrees at t = " + to_string(t));
        }
        out.verification_points.push_back(t);
    }
    return out;
}

IntPoly reduced_disc(const DiscInT& dt) { return squarefree_part_poly(dt.poly); }

std::string_view to_string(KonigOutcome k) {
    switch (k) {
        case KonigOutcome::pass: return "pass";
        case KonigOutcome::fail: return "fail";
        case KonigOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

KonigReport konig_check(const IntPoly& dred, const std::vector<IntPoly>& candidate_factors, int sample_range) {
    if (dred.is_zero()) throw std::invalid_argument("konig_check: zero polynomial");
    KonigReport report;

    if (candidate_factors.empty()) {
        if (dred.degree() <= 3) {
            report.condition_i = KonigOutcome::pass;
            report.detail_i = "degree " + std::to_string(dred.degree()) + " < 4";
        } else {
            report.condition_i = KonigOutcome::inconclusive;
            report.detail_i = "no factorization supplied for a polynomial of degree " + std::to_string(dred.degree());
        }
    } else {
        IntPoly product = IntPoly::constant(Integer(1));
        for (const auto& f : candidate_factors) product = product * f;
        if (product != dred) {
            throw std::invalid_argument("konig_check: candidate factors multiply to " + product.to_string() +
                                        ", not " + dred.to_string());
        }
        bool all_small = true;
        for (const auto& f : candidate_factors) {
            KonigFactorInfo info{f, f.degree() <= 3, std::nullopt};
            if (f.degree() >= 1 && f.degree() <= 3) info.irreducible = rational_roots(f).empty() || f.degree() == 1;
            all_small = all_small && info.degree_at_most_3;
            report.factors.push_back(std::move(info));
        }
        report.condition_i = all_small ? KonigOutcome::pass : KonigOutcome::inconclusive;
        report.detail_i = all_small ? "every factor has degree <= 3" : "a supplied factor has degree >= 4";
    }

    const int upper = std::max(sample_range, 50);
    Integer g = 0;
    for (int t = 0; t <= upper; ++t) {
        const Integer v = evaluate(dred, Integer(t));
        report.samples.emplace_back(Integer(t), v);
        g = gcd(g, v);
    }
    report.sample_gcd = g;
    if (g == 1) {
        report.condition_ii = KonigOutcome::pass;
    } else {
        report.condition_ii = KonigOutcome::fail;
        if (g != 0) {
            for (const auto& [p, e] : factorize(g)) report.common_primes.push_back(p);
        }
    }
    return report;
}

}  // namespace exunits
