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

#include <doctest.h>

#include <algorithm>

#include "exunits/expr.hpp"
#include "exunits/numberfield.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace exunits;

namespace {

IntPoly f_of(long t) { return IntPoly::from_descending({1, -t, -1, t, 1}); }
IntPoly h_of(long t) { return IntPoly::from_descending({1, -t, -3, t, 1}); }

NFElement elem(const NumberField& k, const char* expr) { return k.from_poly(parse_int_poly(expr)); }

RatPoly oracle_charpoly(const NFElement& x) {
    return oracle::charpoly_by_determinant(oracle::multiplication_matrix(x.field().modulus(), x.as_poly()));
}

bool same_set(std::vector<NFElement> a, std::vector<NFElement> b) {
    auto key = [](const NFElement& e) {
        std::string s;
        for (const auto& c : e.coords()) s += to_string(c) + ",";
        return s;
    };
    auto by_key = [&](const NFElement& x, const NFElement& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), by_key);
    std::sort(b.begin(), b.end(), by_key);
    return a == b;
}

}  // namespace

TEST_CASE("field arithmetic in f(x;4)") {
    const NumberField k(f_of(4));
    const NFElement a = k.generator();
    const NFElement one = k.from_rational(1);
    CHECK(a * a.inverse() == one);
    CHECK(a.inverse() == -elem(k, "x^3-4x^2-x+4"));
    const NFElement beta = (a * a - one) * a.inverse();
    CHECK(beta == elem(k, "x^3-4x^2+4"));
    CHECK(beta / beta == one);
    CHECK((a + one) - one == a);
    CHECK_THROWS(k.from_rational(0).inverse());
    const NumberField other(h_of(7));
    CHECK_THROWS(a + other.generator());
    CHECK_THROWS(NumberField(parse_int_poly("x^4-2x^3-x^2+2x+1")));
}

TEST_CASE("characteristic polynomials") {
    const NumberField k(f_of(4));
    const NFElement a = k.generator();
    CHECK(charpoly(a) == to_rational(f_of(4)));
    const NFElement beta = elem(k, "x^3-4x^2+4");
    CHECK(charpoly(beta) == to_rational(parse_int_poly("(x^2-4x+1)^2")));
    CHECK(charpoly(a * a) == to_rational(parse_int_poly("x^4-18x^3+35x^2-18x+1")));
    CHECK(charpoly(a * a) == oracle_charpoly(a * a));
}

TEST_CASE("minimal polynomials") {
    const NumberField k(f_of(4));
    const NFElement a = k.generator();
    const MinPoly mb = minpoly(elem(k, "x^3-4x^2+4"));
    REQUIRE(mb.integral);
    CHECK(*mb.integral == parse_int_poly("x^2-4x+1"));
    for (long t = 3; t <= 20; ++t) {
        const NumberField kt(f_of(t));
        const MinPoly m = minpoly(kt.generator() + kt.from_rational(1));
        REQUIRE(m.integral);
        CHECK(*m.integral == shift_by(f_of(t), Integer(1)));
    }
    const MinPoly two = minpoly(k.from_rational(2));
    CHECK(*two.integral == parse_int_poly("x-2"));
    const MinPoly half = minpoly(a * k.from_rational(Rational(1, 2)));
    CHECK_FALSE(half.integral.has_value());
    CHECK(half.poly.degree() == 4);
    CHECK(half.poly.is_monic());
}

TEST_CASE("units and exceptional units") {
    const NumberField k(f_of(4));
    const NFElement a = k.generator();
    CHECK(is_exceptional(a));
    CHECK(is_exceptional(a * a));
    CHECK_FALSE(is_unit(k.from_rational(2)));
    CHECK(is_unit(k.from_rational(-1)));
    CHECK_FALSE(is_exceptional(k.from_rational(-1)));  // 1 - (-1) = 2
    // N(1 - a^2) = f(1) f(-1)
    CHECK(norm(k.from_rational(1) - a * a) == Rational(evaluate(f_of(4), Integer(1)) * evaluate(f_of(4), Integer(-1))));
}

TEST_CASE("six-element orbit") {
    const NumberField k(f_of(4));
    const NFElement a = k.generator();
    const auto orb = orbit6(a);
    std::vector<NFElement> v(orb.begin(), orb.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(is_exceptional(v[i]));
        for (std::size_t j = i + 1; j < v.size(); ++j) CHECK_FALSE(v[i] == v[j]);
        const auto again = orbit6(v[i]);
        CHECK(same_set(std::vector<NFElement>(again.begin(), again.end()), v));
    }
    CHECK_THROWS(orbit6(k.from_rational(0)));
    CHECK_THROWS(orbit6(k.from_rational(1)));
}

TEST_CASE("eighteen exceptional units") {
    for (const IntPoly& p : {f_of(4), f_of(5), h_of(7)}) {
        const auto r = eighteen_units(NumberField(p));
        CHECK(r.count_distinct == 18);
        CHECK(r.all_exceptional);
        CHECK(r.distinct.size() == 18);
    }
}

TEST_CASE("graeffe transform") {
    CHECK(graeffe_square_minpoly(f_of(4)) == parse_int_poly("x^4-18x^3+35x^2-18x+1"));
    CHECK_THROWS(graeffe_square_minpoly(parse_int_poly("2x^2+1")));
    gen::Gen g(501);
    for (int i = 0; i < 200; ++i) {
        const IntPoly p = g.monic(static_cast<int>(g.range(1, 7)), 30);
        const IntPoly q = graeffe_square_minpoly(p);
        CHECK(q == oracle::graeffe_by_expansion(p));
        CHECK(abs(q[0]) == p[0] * p[0]);
        CHECK(abs(evaluate(q, Integer(1))) == abs(evaluate(p, Integer(1)) * evaluate(p, Integer(-1))));
    }
    for (long t = 4; t <= 50; ++t) {
        for (const IntPoly& p : {f_of(t), h_of(t)}) {
            const NumberField k(p);
            const NFElement a = k.generator();
            CHECK(*minpoly(a * a).integral == graeffe_square_minpoly(p));
            CHECK(abs(evaluate(graeffe_square_minpoly(p), Integer(1))) == 1);
        }
    }
}

TEST_CASE("quadratic subfield witness") {
    CHECK(subfield_witness(NumberField(f_of(4)), Integer(4)).d == 3);
    CHECK(subfield_witness(NumberField(f_of(3)), Integer(3)).d == 5);
    CHECK(subfield_witness(NumberField(f_of(6)), Integer(6)).d == 2);
    for (long t = 3; t <= 200; ++t) {
        const NumberField k(f_of(t));
        const auto w = subfield_witness(k, Integer(t));
        const Integer T(t);
        // beta^2 - t beta + 1 = 0 exactly
        CHECK((w.beta * w.beta - k.from_rational(Rational(T)) * w.beta + k.from_rational(1)).is_zero());
        CHECK(w.beta_minpoly == IntPoly{Integer(1), -T, Integer(1)});
        CHECK(w.d == squarefree_part(T * T - 4));
    }
    for (long t = 1; t <= 200; ++t) {
        const NumberField k(h_of(t));
        const auto w = subfield_witness(k, Integer(t), QuadraticFamily::h);
        const Integer T(t);
        CHECK((w.beta * w.beta - k.from_rational(Rational(T)) * w.beta - k.from_rational(1)).is_zero());
        CHECK(w.d == squarefree_part(T * T + 4));
    }
    CHECK_THROWS(subfield_witness(NumberField(f_of(4)), Integer(5)));
}

TEST_CASE("property: norm of c - alpha equals p(c)") {
    gen::Gen g(502);
    const std::vector<IntPoly> fields = {f_of(4), f_of(11), h_of(7), parse_int_poly("x^4-7x^3+4x+1"),
                                         parse_int_poly("x^3+2x^2-3x-1"), parse_int_poly("x^4+x^3+x^2+x-1"),
                                         parse_int_poly("x^5-8x^4+4x+1")};
    for (const auto& p : fields) {
        const NumberField k(p);
        for (int i = 0; i < 40; ++i) {
            const Rational c = g.rational(50);
            CHECK(norm(k.from_rational(c) - k.generator()) == evaluate(p, c));
        }
    }
}

TEST_CASE("property: charpoly agrees with the determinant oracle") {
    gen::Gen g(503);
    const NumberField k(f_of(7));
    for (int i = 0; i < 60; ++i) {
        std::vector<Rational> c;
        for (int j = 0; j < 4; ++j) c.push_back(g.rational(9));
        const NFElement x = k.from_coords(c);
        CHECK(charpoly(x) == oracle_charpoly(x));
    }
}

TEST_CASE("property: units are closed under products") {
    gen::Gen g(504);
    const NumberField k(h_of(9));
    const auto units = eighteen_units(k).distinct;
    for (int i = 0; i < 100; ++i) {
        const auto& x = units[static_cast<std::size_t>(g.range(0, 17))];
        const auto& y = units[static_cast<std::size_t>(g.range(0, 17))];
        CHECK(is_unit(x * y));
        CHECK(is_unit(x / y));
    }
    for (const auto& u : units) {
        const auto orb = orbit6(u);
        for (const auto& v : orb) CHECK(is_exceptional(v));
    }
}
