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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exunits/expr.hpp"
#include "exunits/families.hpp"
#include "exunits/galois4.hpp"
#include "exunits/irreducibility.hpp"
#include "exunits/monodisc.hpp"
#include "exunits/numberfield.hpp"
#include "exunits/quadsub.hpp"
#include "exunits/realroots.hpp"
#include "exunits/report.hpp"

namespace py = pybind11;
using namespace exunits;

namespace {

// Python ints cross the boundary through their decimal text, so size is unbounded.
Integer to_integer(const py::int_& v) { return Integer(std::string(py::str(v)), 10); }

py::int_ to_py(const Integer& n) {
    return py::module_::import("builtins").attr("int")(py::str(to_string(n)));
}

py::list to_py(std::span<const Integer> v) {
    py::list out;
    for (const auto& n : v) out.append(to_py(n));
    return out;
}

std::vector<Integer> to_integers(const std::vector<py::int_>& v) {
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& n : v) out.push_back(to_integer(n));
    return out;
}

// Coefficients are given highest degree first, as they are written.
IntPoly to_poly(const std::vector<py::int_>& descending) {
    if (descending.empty()) throw std::invalid_argument("empty coefficient list");
    return IntPoly::from_descending(to_integers(descending));
}

py::list descending(const IntPoly& p) {
    py::list out;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) out.append(to_py(*it));
    return out;
}

FamilySpec to_spec(const std::string& family, const std::vector<py::int_>& params) {
    FamilySpec s{parse_family_id(family), to_integers(params)};
    check_arity(s);
    return s;
}

py::object json_to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for exceptional-unit families";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ContradictionError>(m, "ContradictionError", PyExc_ArithmeticError);

    m.def("families", [] {
        std::vector<std::string> out;
        for (auto id : all_families()) out.emplace_back(to_string(id));
        return out;
    });
    m.def("make_family", [](const std::string& family, const std::vector<py::int_>& params) {
        return descending(make_family(to_spec(family, params)));
    }, py::arg("family"), py::arg("params"));
    m.def("verify", [](const std::string& family, const std::vector<py::int_>& params) {
        return json_to_py(to_json(verify(to_spec(family, params))));
    }, py::arg("family"), py::arg("params"));

    m.def("parse_poly", [](const std::string& text) { return descending(parse_int_poly(text)); });
    m.def("poly_text", [](const std::vector<py::int_>& c) { return to_poly(c).to_string(); });

    m.def("discriminant", [](const std::vector<py::int_>& c) { return to_py(discriminant(to_poly(c))); });
    m.def("real_root_count", [](const std::vector<py::int_>& c) { return sturm_real_root_count(to_poly(c)); });
    m.def("signature", [](const std::vector<py::int_>& c) {
        const Signature s = signature(to_poly(c));
        return std::pair{s.r1, s.r2};
    });
    m.def("is_irreducible", [](const std::vector<py::int_>& c) -> std::optional<bool> {
        const auto v = irreducibility_evidence(to_poly(c));
        if (v.status == IrreducibilityStatus::inconclusive) return std::nullopt;
        return v.proven();
    }, "True or False when decided, None when inconclusive");
    m.def("perron", [](const std::vector<py::int_>& c) { return std::string(to_string(perron_check(to_poly(c)))); });
    m.def("galois_group", [](const std::vector<py::int_>& c) {
        return std::string(to_string(classify_quartic(to_poly(c))));
    });

    m.def("minpoly", [](const std::vector<py::int_>& modulus, const std::string& element) -> py::object {
        const NumberField k(to_poly(modulus));
        const MinPoly mp = minpoly(k.from_poly(parse_int_poly(element)));
        if (!mp.integral) return py::none();
        return descending(*mp.integral);
    }, py::arg("modulus"), py::arg("element"), "integral minimal polynomial, or None if not an algebraic integer");
    m.def("is_exceptional", [](const std::vector<py::int_>& modulus, const std::string& element) {
        const NumberField k(to_poly(modulus));
        return is_exceptional(k.from_poly(parse_int_poly(element)));
    }, py::arg("modulus"), py::arg("element"));
    m.def("eighteen_units", [](const std::vector<py::int_>& modulus) {
        return eighteen_units(NumberField(to_poly(modulus))).count_distinct;
    });
    m.def("graeffe", [](const std::vector<py::int_>& c) { return descending(graeffe_square_minpoly(to_poly(c))); });

    m.def("pell4", [](const py::int_& d) {
        const auto s = pell4_solve(to_integer(d));
        return py::make_tuple(to_py(s.t), to_py(s.s));
    }, py::arg("d"), "(t, s) with t^2 - d s^2 = 4");
    m.def("embed", [](const py::int_& d) { return to_py(embed_quadratic(to_integer(d)).params.at(0)); });
    m.def("tower_step", [](const py::int_& t) { return to_py(tower_step(to_integer(t))); });
    m.def("appendix_scan", [](std::uint64_t bound) { return to_py(appendix_scan(bound).hits); });
    m.def("squarefree_part", [](const py::int_& n) { return to_py(squarefree_part(to_integer(n))); });

    m.def("disc_in_t", [](const std::string& family, const std::vector<py::int_>& fixed) {
        return descending(disc_in_t(parse_family_id(family), to_integers(fixed)).poly);
    }, py::arg("family"), py::arg("fixed") = std::vector<py::int_>{});
    m.def("reduced_disc_in_t", [](const std::string& family, const std::vector<py::int_>& fixed) {
        return descending(reduced_disc(disc_in_t(parse_family_id(family), to_integers(fixed))));
    }, py::arg("family"), py::arg("fixed") = std::vector<py::int_>{});
    m.def("evertse_bound", [](long n, long r) { return to_py(evertse_bound(n, r)); });
}
