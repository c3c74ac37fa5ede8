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

#ifndef EXUNITS_POLY_HPP
#define EXUNITS_POLY_HPP

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exunits/integer.hpp"

namespace exunits {

/// Dense univariate polynomial over an exact coefficient ring, coefficients
/// stored in ascending degree order. Trailing zeros are always stripped, so the
/// zero polynomial is the empty vector and has degree -1.
template <class Coeff>
class DensePoly {
  public:
    using coeff_type = Coeff;

    DensePoly() = default;
    DensePoly(std::initializer_list<Coeff> ascending) : c_(ascending) { trim(); }
    explicit DensePoly(std::vector<Coeff> ascending) : c_(std::move(ascending)) { trim(); }

    static DensePoly constant(const Coeff& v) { return DensePoly(std::vector<Coeff>{v}); }

    /// c * x^k
    static DensePoly monomial(const Coeff& c, std::size_t k) {
        std::vector<Coeff> v(k + 1, Coeff(0));
        v[k] = c;
        return DensePoly(std::move(v));
    }

    static DensePoly from_descending(std::vector<Coeff> descending) {
        return DensePoly(std::vector<Coeff>(descending.rbegin(), descending.rend()));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::span<const Coeff> coeffs() const noexcept { return c_; }

    /// Coefficient of x^i; zero beyond the degree.
    Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
    const Coeff& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    DensePoly& operator+=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    DensePoly& operator*=(const Coeff& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator-(DensePoly a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend DensePoly operator*(DensePoly a, const Coeff& s) { return a *= s; }
    friend DensePoly operator*(const Coeff& s, DensePoly a) { return a *= s; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(r));
    }
    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

    DensePoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Coeff> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Coeff(static_cast<long>(i));
        return DensePoly(std::move(r));
    }

    /// Horner evaluation; Value must accept Coeff in its arithmetic.
    template <class Value>
    Value evaluate(const Value& x) const {
        Value acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Value(*it);
        return acc;
    }

    /// Human-readable form in descending degree, e.g. "x^4-18x^3+35x^2-18x+1".
    std::string to_string(std::string_view var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPoly = DensePoly<Integer>;
using RatPoly = DensePoly<Rational>;

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const DensePoly<Coeff>& p) {
    return os << p.to_string();
}

RatPoly to_rational(const IntPoly& p);

/// Clears denominators and divides by the content; leading coefficient positive.
IntPoly primitive_integer_part(const RatPoly& p);

Integer content(const IntPoly& p);  // nonnegative gcd of the coefficients
IntPoly primitive_part(const IntPoly& p);

Rational evaluate(const IntPoly& p, const Rational& x);
Integer evaluate(const IntPoly& p, const Integer& x);

// Variable substitutions.
IntPoly shift_by(const IntPoly& p, const Integer& c);  // p(x - c): roots move by +c
IntPoly negate_var(const IntPoly& p);                 // p(-x), times -1 for odd degree
IntPoly reverse(const IntPoly& p);                    // x^n p(1/x); needs p(0) != 0

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exact over Z.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b over Z; throws if b does not divide a in Z[x].
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);
/// True when b divides a in Z[x] (b monic or not).
bool divides(const IntPoly& b, const IntPoly& a);

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly make_monic(const RatPoly& p);
RatPoly gcd_over_q(const RatPoly& p, const RatPoly& q);

/// Resultant by the subresultant PRS (integer arithmetic only).
Integer resultant(const IntPoly& p, const IntPoly& q);

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p)
Integer discriminant(const IntPoly& p);

/// p / gcd(p, p') as a primitive integer polynomial with positive leading coefficient.
IntPoly squarefree_part_poly(const IntPoly& p);

}  // namespace exunits

#endif
