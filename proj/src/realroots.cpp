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

#include "exunits/realroots.hpp"

namespace exunits {

namespace {

int sign_changes(const std::vector<RatPoly>& chain, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sgn(q.evaluate(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Rational cauchy_bound(const IntPoly& p) {
    Integer m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Integer(abs(p[static_cast<std::size_t>(i)])));
    return 1 + Rational(m, abs(p.leading()));
}

}  // namespace

std::vector<RatPoly> sturm_chain(const IntPoly& squarefree) {
    std::vector<RatPoly> chain;
    chain.push_back(to_rational(squarefree));
    if (squarefree.degree() < 1) return chain;
    chain.push_back(chain.back().derivative());
    while (chain.back().degree() > 0) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sturm_real_root_count(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("sturm_real_root_count: zero polynomial");
    if (p.degree() == 0) return 0;
    const IntPoly sf = squarefree_part_poly(p);
    const auto chain = sturm_chain(sf);
    Rational bound = cauchy_bound(sf);
    bound.canonicalize();
    return sign_changes(chain, -bound) - sign_changes(chain, bound);
}

Signature signature(const IntPoly& p) {
    if (p.degree() < 1) throw std::domain_error("signature: polynomial must be nonconstant");
    const IntPoly sf = squarefree_part_poly(p);
    Signature sig;
    sig.r1 = sturm_real_root_count(sf);
    sig.r2 = (sf.degree() - sig.r1) / 2;
    return sig;
}

QuarticInvariants quartic_invariants(const Integer& a, const Integer& b, const Integer& c) {
    QuarticInvariants inv;
    const Integer a2 = a * a;
    const Integer b2 = b * b;
    const Integer c2 = c * c;
    inv.delta = 256 - 192 * a * c - 128 * b2 + 144 * b * c2 - 27 * c2 * c2 + 144 * a2 * b -
                6 * a2 * c2 - 80 * a * b2 * c + 18 * a * b * c2 * c + 16 * b2 * b2 -
                4 * b2 * b * c2 - 27 * a2 * a2 + 18 * a2 * a * b * c - 4 * a2 * a * c2 * c -
                4 * a2 * b2 * b + a2 * b2 * c2;
    inv.dval = 64 - 16 * b2 + 16 * a2 * b - 16 * a * c - 3 * a2 * a2;
    inv.pval = 8 * b - 3 * a2;
    return inv;
}

bool all_real_sufficient(const QuarticInvariants& inv) {
    return sgn(inv.delta) > 0 && sgn(inv.pval) < 0 && sgn(inv.dval) < 0;
}

int unit_rank(const Signature& sig) {
    if (sig.r1 < 0 || sig.r2 < 0) throw std::invalid_argument("unit_rank: negative signature");
    if (sig.degree() < 2) throw std::invalid_argument("unit_rank: degree must be at least 2");
    return sig.r1 + sig.r2 - 1;
}

}  // namespace exunits
