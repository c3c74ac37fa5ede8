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

#ifndef EXUNITS_NUMBERFIELD_HPP
#define EXUNITS_NUMBERFIELD_HPP

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "exunits/irreducibility.hpp"
#include "exunits/poly.hpp"

namespace exunits {

namespace detail {
struct FieldData;
}

class NumberField;

/// Element of Q[x]/(f), stored as rational coordinates on 1, a, ..., a^(n-1).
class NFElement {
  public:
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    NumberField field() const;

    bool is_zero() const;
    NFElement inverse() const;

    /// The element as a polynomial in the generator.
    RatPoly as_poly() const { return RatPoly(coords_); }

    friend NFElement operator+(const NFElement& x, const NFElement& y);
    friend NFElement operator-(const NFElement& x, const NFElement& y);
    friend NFElement operator-(const NFElement& x);
    friend NFElement operator*(const NFElement& x, const NFElement& y);
    friend NFElement operator/(const NFElement& x, const NFElement& y) { return x * y.inverse(); }
    friend bool operator==(const NFElement& x, const NFElement& y);

  private:
    friend class NumberField;
    NFElement(std::shared_ptr<const detail::FieldData> field, std::vector<Rational> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {}

    std::shared_ptr<const detail::FieldData> field_;
    std::vector<Rational> coords_;
};

/// The field Q(a) with a a root of a monic integer polynomial. Copies share
/// the same immutable context; elements from different contexts never mix.
class NumberField {
  public:
    /// Runs irreducibility_evidence on the modulus and rejects it if a factor is found.
    explicit NumberField(IntPoly modulus);

    const IntPoly& modulus() const;
    int degree() const;
    const IrreducibilityVerdict& irreducibility() const;

    NFElement generator() const;
    NFElement from_rational(const Rational& q) const;
    /// Reduces an arbitrary polynomial in the generator modulo the minimal polynomial.
    NFElement from_poly(const RatPoly& p) const;
    NFElement from_poly(const IntPoly& p) const { return from_poly(to_rational(p)); }
    NFElement from_coords(std::vector<Rational> coords) const;

    friend bool operator==(const NumberField& a, const NumberField& b);

  private:
    friend class NFElement;
    explicit NumberField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

/// Characteristic polynomial of multiplication by x, monic of degree n.
RatPoly charpoly(const NFElement& x);

Rational norm(const NFElement& x);

struct MinPoly {
    RatPoly poly;                 // monic over Q
    std::optional<IntPoly> integral;  // set when x is an algebraic integer
};

MinPoly minpoly(const NFElement& x);

bool is_unit(const NFElement& x);
bool is_exceptional(const NFElement& x);

/// {x, 1/x, 1-x, 1/(1-x), (x-1)/x, x/(x-1)}; x must differ from 0 and 1.
std::array<NFElement, 6> orbit6(const NFElement& x);

struct EighteenUnits {
    std::vector<NFElement> distinct;  // union of the orbits of a, a^2, -1/a
    int count_distinct = 0;
    bool all_exceptional = false;
};

EighteenUnits eighteen_units(const NumberField& field);

/// q with q(x^2) = +-p(x) p(-x), monic: its roots are the squares of the roots of p.
IntPoly graeffe_square_minpoly(const IntPoly& p);

enum class QuadraticFamily { f, h };

struct SubfieldWitness {
    NFElement beta;    // (a^2 - 1) / a
    IntPoly beta_minpoly;
    Integer d;         // squarefree part of t^2 - 4 (family f) or t^2 + 4 (family h)
};

/// Exhibits the real quadratic subfield of Q(a) for a root a of f(x;t) or h(x;t):
/// beta = (a^2 - 1)/a satisfies beta^2 - t beta -+ 1 = 0. Throws
/// ContradictionError if that identity fails.
SubfieldWitness subfield_witness(const NumberField& field, const Integer& t,
                                 QuadraticFamily family = QuadraticFamily::f);

}  // namespace exunits

#endif
