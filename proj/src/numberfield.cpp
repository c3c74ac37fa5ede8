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

#include "exunits/numberfield.hpp"

#include <algorithm>

namespace exunits {

namespace detail {

struct FieldData {
    IntPoly modulus;
    RatPoly modulus_q;
    IrreducibilityVerdict verdict;
};

}  // namespace detail

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Extended Euclid over Q: returns (g, s) with s*a == g (mod m), g monic.
std::pair<RatPoly, RatPoly> half_extended_gcd(const RatPoly& a, const RatPoly& m) {
    RatPoly r0 = m, r1 = a;
    RatPoly s0, s1 = RatPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const Rational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv};
}

Matrix multiplication_matrix(const NFElement& x) {
    const NumberField field = x.field();
    const int n = field.degree();
    Matrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    NFElement col = x;
    const NFElement alpha = field.generator();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coords()[static_cast<std::size_t>(i)];
        }
        col = col * alpha;
    }
    return m;
}

}  // namespace

NumberField::NumberField(IntPoly modulus) {
    if (modulus.degree() < 1 || !modulus.is_monic()) {
        throw std::invalid_argument("NumberField: modulus must be monic and nonconstant");
    }
    auto data = std::make_shared<detail::FieldData>();
    data->verdict = irreducibility_evidence(modulus);
    if (data->verdict.status == IrreducibilityStatus::reducible_with_witness) {
        throw std::invalid_argument("NumberField: modulus " + modulus.to_string() + " is reducible");
    }
    data->modulus_q = to_rational(modulus);
    data->modulus = std::move(modulus);
    data_ = std::move(data);
}

const IntPoly& NumberField::modulus() const { return data_->modulus; }

int NumberField::degree() const { return data_->modulus.degree(); }

const IrreducibilityVerdict& NumberField::irreducibility() const { return data_->verdict; }

NFElement NumberField::from_coords(std::vector<Rational> coords) const {
    if (coords.size() != static_cast<std::size_t>(degree())) {
        throw std::invalid_argument("NumberField: coordinate vector has the wrong length");
    }
    return NFElement(data_, std::move(coords));
}

NFElement NumberField::from_poly(const RatPoly& p) const {
    const RatPoly r = p.degree() >= degree() ? divmod(p, data_->modulus_q).second : p;
    std::vector<Rational> coords(static_cast<std::size_t>(degree()), Rational(0));
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) coords[i] = r.coeffs()[i];
    return NFElement(data_, std::move(coords));
}

NFElement NumberField::from_rational(const Rational& q) const { return from_poly(RatPoly::constant(q)); }

NFElement NumberField::generator() const { return from_poly(RatPoly::monomial(Rational(1), 1)); }

bool operator==(const NumberField& a, const NumberField& b) {
    return a.data_ == b.data_ || a.data_->modulus == b.data_->modulus;
}

NumberField NFElement::field() const { return NumberField(field_); }

bool NFElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

NFElement NFElement::inverse() const {
    if (is_zero()) throw std::domain_error("NFElement: inversion of zero");
    auto [g, s] = half_extended_gcd(as_poly(), field_->modulus_q);
    if (g.degree() != 0) {
        throw std::domain_error("NFElement: element is a zero divisor; modulus is not irreducible");
    }
    return field().from_poly(s);
}

NFElement operator+(const NFElement& x, const NFElement& y) {
    if (!(x.field() == y.field())) throw std::invalid_argument("number field elements from different fields");
    std::vector<Rational> c = x.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coords_[i];
    return NFElement(x.field_, std::move(c));
}

NFElement operator-(const NFElement& x, const NFElement& y) {
    if (!(x.field() == y.field())) throw std::invalid_argument("number field elements from different fields");
    std::vector<Rational> c = x.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= y.coords_[i];
    return NFElement(x.field_, std::move(c));
}

NFElement operator-(const NFElement& x) {
    std::vector<Rational> c = x.coords_;
    for (auto& v : c) v = -v;
    return NFElement(x.field_, std::move(c));
}

NFElement operator*(const NFElement& x, const NFElement& y) {
    if (!(x.field() == y.field())) throw std::invalid_argument("number field elements from different fields");
    return x.field().from_poly(x.as_poly() * y.as_poly());
}

bool operator==(const NFElement& x, const NFElement& y) {
    return x.field() == y.field() && x.coords_ == y.coords_;
}

RatPoly charpoly(const NFElement& x) {
    // Faddeev-LeVerrier: exact over Q for the small degrees used here.
    const Matrix a = multiplication_matrix(x);
    const std::size_t n = a.size();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        // m <- a*m + c[n-k+1] I
        Matrix next(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                next[i][j] = s;
            }
            next[i][i] += c[n - k + 1];
        }
        m = std::move(next);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        }
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return RatPoly(std::move(c));
}

Rational norm(const NFElement& x) {
    const RatPoly cp = charpoly(x);
    const Rational c0 = cp[0];
    return (cp.degree() % 2 == 0) ? c0 : Rational(-c0);
}

MinPoly minpoly(const NFElement& x) {
    const RatPoly cp = charpoly(x);
    const RatPoly g = gcd_over_q(cp, cp.derivative());
    MinPoly out;
    out.poly = make_monic(divmod(cp, g).first);
    const bool integral = std::all_of(out.poly.coeffs().begin(), out.poly.coeffs().end(),
                                      [](const Rational& q) { return q.get_den() == 1; });
    if (integral) {
        std::vector<Integer> v;
        for (const auto& q : out.poly.coeffs()) v.emplace_back(q.get_num());
        out.integral = IntPoly(std::move(v));
    }
    return out;
}

bool is_unit(const NFElement& x) {
    const RatPoly cp = charpoly(x);
    const bool integral = std::all_of(cp.coeffs().begin(), cp.coeffs().end(),
                                      [](const Rational& q) { return q.get_den() == 1; });
    return integral && abs(cp[0]) == 1;
}

bool is_exceptional(const NFElement& x) {
    return is_unit(x) && is_unit(x.field().from_rational(Rational(1)) - x);
}

std::array<NFElement, 6> orbit6(const NFElement& x) {
    const NFElement one = x.field().from_rational(Rational(1));
    if (x.is_zero() || x == one) throw std::domain_error("orbit6: element must differ from 0 and 1");
    const NFElement inv = x.inverse();
    const NFElement comp = one - x;
    const NFElement comp_inv = comp.inverse();
    return {x, inv, comp, comp_inv, one - inv, one - comp_inv};
}

EighteenUnits eighteen_units(const NumberField& field) {
    const NFElement alpha = field.generator();
    const std::array<NFElement, 3> seeds{alpha, alpha * alpha, -alpha.inverse()};
    EighteenUnits out;
    for (const auto& seed : seeds) {
        for (const auto& u : orbit6(seed)) {
            if (std::find(out.distinct.begin(), out.distinct.end(), u) == out.distinct.end()) {
                out.distinct.push_back(u);
            }
        }
    }
    out.count_distinct = static_cast<int>(out.distinct.size());
    out.all_exceptional = std::all_of(out.distinct.begin(), out.distinct.end(),
                                      [](const NFElement& u) { return is_exceptional(u); });
    return out;
}

IntPoly graeffe_square_minpoly(const IntPoly& p) {
    if (!p.is_monic()) throw std::invalid_argument("graeffe_square_minpoly: expected a monic polynomial");
    std::vector<Integer> neg(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    const IntPoly prod = p * IntPoly(std::move(neg));
    std::vector<Integer> even;
    for (std::size_t i = 0; i < prod.coeffs().size(); i += 2) even.push_back(prod.coeffs()[i]);
    IntPoly q(std::move(even));
    if (p.degree() % 2 == 1) q = -q;
    return q;
}

SubfieldWitness subfield_witness(const NumberField& field, const Integer& t, QuadraticFamily family) {
    if (family == QuadraticFamily::f && t < 3) throw std::invalid_argument("subfield_witness: family f needs t >= 3");
    if (family == QuadraticFamily::h && t < 1) throw std::invalid_argument("subfield_witness: family h needs t >= 1");
    const NFElement alpha = field.generator();
    const NFElement one = field.from_rational(Rational(1));
    const NFElement beta = (alpha * alpha - one) * alpha.inverse();
    const Rational constant = family == QuadraticFamily::f ? 1 : -1;
    const NFElement lhs = beta * beta - field.from_rational(Rational(t)) * beta + field.from_rational(constant);
    if (!lhs.is_zero()) {
        throw ContradictionError("subfield_witness: beta^2 - t beta " +
                                 std::string(family == QuadraticFamily::f ? "+ 1" : "- 1") + " is nonzero");
    }
    const MinPoly mp = minpoly(beta);
    if (mp.poly.degree() != 2 || !mp.integral) {
        throw ContradictionError("subfield_witness: beta does not generate a quadratic subfield");
    }
    const Integer disc = discriminant(*mp.integral);
    return SubfieldWitness{beta, *mp.integral, squarefree_part(disc)};
}

}  // namespace exunits
