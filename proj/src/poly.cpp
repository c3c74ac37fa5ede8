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

#include "exunits/poly.hpp"

#include <sstream>

namespace exunits {

namespace {

template <class Coeff>
void write_coeff(std::ostringstream& os, const Coeff& mag, bool show_one) {
    if constexpr (std::is_same_v<Coeff, Rational>) {
        if (mag.get_den() != 1) {
            os << '(' << mag.get_str() << ')';
            return;
        }
    }
    if (show_one || mag != 1) os << mag.get_str();
}

}  // namespace

template <class Coeff>
std::string DensePoly<Coeff>::to_string(std::string_view var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Coeff& v = c_[static_cast<std::size_t>(k)];
        if (v == 0) continue;
        const bool neg = sgn(v) < 0;
        if (neg) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        Coeff mag = neg ? Coeff(-v) : v;
        write_coeff(os, mag, k == 0);
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return os.str();
}

template class DensePoly<Integer>;
template class DensePoly<Rational>;

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return RatPoly(std::move(v));
}

IntPoly primitive_integer_part(const RatPoly& p) {
    if (p.is_zero()) return {};
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(Integer(c.get_num()) * (den / c.get_den()));
    IntPoly r = primitive_part(IntPoly(std::move(v)));
    return sgn(r.leading()) < 0 ? -r : r;
}

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    const Integer g = content(p);
    std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

Rational evaluate(const IntPoly& p, const Rational& x) { return p.evaluate(x); }

Integer evaluate(const IntPoly& p, const Integer& x) { return p.evaluate(x); }

IntPoly shift_by(const IntPoly& p, const Integer& c) {
    // Horner in the ring: acc <- acc * (x - c) + a_i
    const IntPoly lin{Integer(-c), Integer(1)};
    IntPoly acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * lin + IntPoly::constant(p[static_cast<std::size_t>(i)]);
    }
    return acc;
}

IntPoly negate_var(const IntPoly& p) {
    std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    IntPoly r(std::move(v));
    if (p.degree() % 2 == 1) r = -r;
    return r;
}

IntPoly reverse(const IntPoly& p) {
    if (p.is_zero() || p[0] == 0) {
        throw std::domain_error("reverse: constant term must be nonzero");
    }
    std::vector<Integer> v(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(v));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_remainder: division by zero polynomial");
    if (a.degree() < b.degree()) return a;
    const int db = b.degree();
    const Integer& lb = b.leading();
    int remaining = a.degree() - db + 1;
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= db) {
        const IntPoly t = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db)) * b;
        r = r * lb - t;
        --remaining;
    }
    if (remaining > 0) r *= ipow(lb, static_cast<unsigned long>(remaining));
    return r;
}

namespace {

// Quotient and remainder over Z; `exact` is false if some leading coefficient
// division did not come out even.
std::pair<IntPoly, IntPoly> int_long_division(const IntPoly& a, const IntPoly& b, bool& exact) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    exact = true;
    IntPoly q;
    IntPoly r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        if (!mpz_divisible_p(r.leading().get_mpz_t(), b.leading().get_mpz_t())) {
            exact = false;
            return {q, r};
        }
        Integer c = r.leading() / b.leading();
        const IntPoly t = IntPoly::monomial(c, static_cast<std::size_t>(r.degree() - db));
        q += t;
        r -= t * b;
    }
    return {q, r};
}

}  // namespace

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
    bool exact = false;
    auto [q, r] = int_long_division(a, b, exact);
    if (!exact || !r.is_zero()) throw std::domain_error("exact_divide: divisor does not divide");
    return q;
}

bool divides(const IntPoly& b, const IntPoly& a) {
    bool exact = false;
    auto [q, r] = int_long_division(a, b, exact);
    return exact && r.is_zero();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    RatPoly q;
    RatPoly r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const RatPoly t = RatPoly::monomial(Rational(r.leading() / b.leading()),
                                            static_cast<std::size_t>(r.degree() - db));
        q += t;
        r -= t * b;
    }
    return {q, r};
}

RatPoly make_monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    const Rational inv = 1 / p.leading();
    return p * inv;
}

RatPoly gcd_over_q(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd_over_q: both inputs are zero");
    RatPoly a = p;
    RatPoly b = q;
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

Integer resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant: zero polynomial");
    IntPoly a = p;
    IntPoly b = q;
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    }
    if (b.degree() == 0) {
        return sign * ipow(b.leading(), static_cast<unsigned long>(a.degree()));
    }
    const Integer ca = content(a);
    const Integer cb = content(b);
    a = primitive_part(a);
    b = primitive_part(b);
    const Integer scale = ipow(ca, static_cast<unsigned long>(b.degree())) *
                          ipow(cb, static_cast<unsigned long>(a.degree()));
    Integer g = 1;
    Integer h = 1;
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return 0;
        const Integer divisor = g * ipow(h, static_cast<unsigned long>(delta));
        std::vector<Integer> v(r.coeffs().begin(), r.coeffs().end());
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        b = IntPoly(std::move(v));
        g = a.leading();
        // h <- g^delta / h^(delta - 1)
        if (delta > 0) {
            Integer num = ipow(g, static_cast<unsigned long>(delta));
            Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() == 0) break;
    }
    // h <- lc(b)^deg(a) / h^(deg(a) - 1)
    const auto da = static_cast<unsigned long>(a.degree());
    Integer num = ipow(b.leading(), da);
    Integer den = ipow(h, da - 1);
    Integer res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return sign * scale * res;
}

Integer discriminant(const IntPoly& p) {
    if (p.degree() < 1) throw std::domain_error("discriminant: polynomial must be nonconstant");
    const int n = p.degree();
    if (n == 1) return 1;
    Integer res = resultant(p, p.derivative());
    Integer d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), p.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

IntPoly squarefree_part_poly(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part_poly: zero polynomial");
    if (p.degree() == 0) return IntPoly{Integer(1)};
    const RatPoly rp = to_rational(p);
    const RatPoly g = gcd_over_q(rp, rp.derivative());
    return primitive_integer_part(divmod(rp, g).first);
}

}  // namespace exunits
