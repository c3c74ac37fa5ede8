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

#include "exunits/irreducibility.hpp"

#include <algorithm>

#include "exunits/fpoly.hpp"

namespace exunits {

std::string_view to_string(IrreducibilityStatus s) {
    switch (s) {
        case IrreducibilityStatus::irreducible_proven: return "irreducible_proven";
        case IrreducibilityStatus::reducible_with_witness: return "reducible_with_witness";
        case IrreducibilityStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string_view to_string(PerronCase c) {
    switch (c) {
        case PerronCase::case_i: return "case_i";
        case PerronCase::case_ii: return "case_ii";
        case PerronCase::not_applicable: return "not_applicable";
    }
    return "?";
}

std::vector<Rational> rational_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    IntPoly q = p;
    // strip the factor x^k
    std::size_t low = 0;
    while (q[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        q = IntPoly(std::vector<Integer>(q.coeffs().begin() + static_cast<std::ptrdiff_t>(low), q.coeffs().end()));
    }
    if (q.degree() < 1) return roots;
    const auto nums = positive_divisors(q[0]);
    const auto dens = positive_divisors(q.leading());
    for (const auto& u : nums) {
        for (const auto& v : dens) {
            if (gcd(u, v) != 1) continue;
            for (int s : {1, -1}) {
                Rational r(s * u, v);
                if (evaluate(q, r) == 0) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

IrreducibilityVerdict linear_witness(const IntPoly& p, const Rational& root) {
    // (den x - num) divides p in Z[x] by Gauss' lemma
    const IntPoly lin{Integer(-root.get_num()), Integer(root.get_den())};
    IrreducibilityVerdict v;
    v.status = IrreducibilityStatus::reducible_with_witness;
    v.factors = {lin, exact_divide(p, lin)};
    v.criterion = "rational_root";
    return v;
}

IrreducibilityVerdict reducible(std::vector<IntPoly> factors, std::string criterion) {
    IrreducibilityVerdict v;
    v.status = IrreducibilityStatus::reducible_with_witness;
    v.factors = std::move(factors);
    v.criterion = std::move(criterion);
    return v;
}

IrreducibilityVerdict proven(std::string criterion) {
    IrreducibilityVerdict v;
    v.status = IrreducibilityStatus::irreducible_proven;
    v.criterion = std::move(criterion);
    return v;
}

bool is_small_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

IrreducibilityVerdict quartic_irreducible(const IntPoly& p) {
    if (p.degree() != 4 || !p.is_monic()) {
        throw std::invalid_argument("quartic_irreducible: expected a monic quartic");
    }
    if (const auto roots = rational_roots(p); !roots.empty()) return linear_witness(p, roots.front());

    const Integer& a = p[3];
    const Integer& b = p[2];
    const Integer& c = p[1];
    const Integer& d = p[0];
    // (x^2 + u x + q)(x^2 + r x + s):  u + r = a,  q + s + u r = b,  u s + q r = c,  q s = d
    for (const auto& pos : positive_divisors(d)) {
        for (int sign : {1, -1}) {
            const Integer q = sign * pos;
            const Integer s = d / q;
            std::vector<Integer> us;
            if (q != s) {
                // u (s - q) = c - q a
                const Integer num = c - q * a;
                const Integer den = s - q;
                if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) us.push_back(num / den);
            } else if (c == q * a) {
                // u^2 - a u + (b - 2q) = 0
                const Integer disc = a * a - 4 * (b - 2 * q);
                if (is_square(disc)) {
                    const Integer root = isqrt(disc);
                    for (const Integer& cand : {Integer(a + root), Integer(a - root)}) {
                        if (mpz_even_p(cand.get_mpz_t())) us.push_back(cand / 2);
                    }
                }
            }
            for (const auto& u : us) {
                const Integer r = a - u;
                if (q + s + u * r == b && u * s + q * r == c) {
                    return reducible({IntPoly{q, u, Integer(1)}, IntPoly{s, r, Integer(1)}},
                                     "quadratic_split");
                }
            }
        }
    }
    return proven("quadratic_split_search");
}

PerronCase perron_check(const IntPoly& p) {
    if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("perron_check: expected a monic polynomial");
    if (p[0] == 0) throw std::invalid_argument("perron_check: constant term must be nonzero");
    const int n = p.degree();
    const Integer lead = abs(p[static_cast<std::size_t>(n - 1)]);
    Integer rest = 1;
    for (int i = 0; i < n - 1; ++i) rest += abs(p[static_cast<std::size_t>(i)]);
    if (lead > rest) return PerronCase::case_i;
    if (lead == rest && evaluate(p, Integer(1)) != 0 && evaluate(p, Integer(-1)) != 0) {
        return PerronCase::case_ii;
    }
    return PerronCase::not_applicable;
}

bool irreducible_mod_p(const IntPoly& p, std::uint32_t prime) {
    if (!is_small_prime(prime)) throw std::invalid_argument("irreducible_mod_p: modulus is not prime");
    if (p.is_zero() || mpz_divisible_ui_p(p.leading().get_mpz_t(), prime)) {
        throw std::invalid_argument("irreducible_mod_p: prime divides the leading coefficient");
    }
    const auto f = fp::reduce(p, prime);
    if (fp::degree(f) < 1) return false;
    const auto degs = fp::factor_degrees(f, prime);
    return degs && degs->size() == 1;
}

std::optional<IntPoly> find_monic_quadratic_factor(const IntPoly& p) {
    if (!p.is_monic() || p.degree() < 2) {
        throw std::invalid_argument("find_monic_quadratic_factor: expected a monic polynomial of degree >= 2");
    }
    if (p[0] == 0) throw std::invalid_argument("find_monic_quadratic_factor: constant term must be nonzero");
    Integer m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Integer(abs(p[static_cast<std::size_t>(i)])));
    const Integer bound = 2 * (m + 1);  // |root sum| < 2 (1 + max|a_i|)
    for (const auto& pos : positive_divisors(p[0])) {
        for (int sign : {1, -1}) {
            const Integer v = sign * pos;
            for (Integer u = -bound; u <= bound; ++u) {
                const IntPoly cand{v, u, Integer(1)};
                if (divides(cand, p)) return cand;
            }
        }
    }
    return std::nullopt;
}

IrreducibilityVerdict irreducibility_evidence(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("irreducibility_evidence: constant polynomial");
    const int n = p.degree();
    if (n == 1) return proven("linear");
    if (const auto roots = rational_roots(p); !roots.empty()) return linear_witness(p, roots.front());
    if (n <= 3) return proven("no_rational_root");
    if (p.is_monic()) {
        if (n == 4) return quartic_irreducible(p);
        if (n == 5) {
            if (auto quad = find_monic_quadratic_factor(p)) {
                return reducible({*quad, exact_divide(p, *quad)}, "quadratic_factor");
            }
            return proven("exhaustive_split_search");
        }
        switch (perron_check(p)) {
            case PerronCase::case_i: return proven("perron_case_i");
            case PerronCase::case_ii: return proven("perron_case_ii");
            case PerronCase::not_applicable: break;
        }
    }
    for (std::uint32_t q : primes_up_to(97)) {
        if (mpz_divisible_ui_p(p.leading().get_mpz_t(), q)) continue;
        if (irreducible_mod_p(p, q)) return proven("irreducible_mod_" + std::to_string(q));
    }
    IrreducibilityVerdict v;
    v.criterion = "no_certificate";
    return v;
}

}  // namespace exunits
