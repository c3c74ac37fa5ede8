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

#include "exunits/report.hpp"

#include <algorithm>
#include <sstream>

namespace exunits {

Json to_json(const Integer& n) { return to_string(n); }

Integer integer_from_json(const Json& j) { return parse_integer(j.get<std::string>()); }

Json to_json(const IntPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"coefficients", coeffs}, {"text", p.to_string()}};
}

IntPoly int_poly_from_json(const Json& j) {
    std::vector<Integer> v;
    for (const auto& c : j.at("coefficients")) v.push_back(integer_from_json(c));
    return IntPoly(std::move(v));
}

Json to_json(const FamilySpec& spec) {
    Json params = Json::array();
    for (const auto& p : spec.params) params.push_back(to_string(p));
    return Json{{"family", std::string(to_string(spec.id))}, {"params", params}};
}

FamilySpec family_spec_from_json(const Json& j) {
    FamilySpec spec;
    spec.id = parse_family_id(j.at("family").get<std::string>());
    for (const auto& p : j.at("params")) spec.params.push_back(integer_from_json(p));
    return spec;
}

Json to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"witness", c.witness}});
    }
    Json factors = Json::array();
    for (const auto& f : r.irreducibility.factors) factors.push_back(to_json(f));
    Json j{
        {"spec", to_json(r.spec)},
        {"polynomial", to_json(r.polynomial)},
        {"in_paper_range", r.in_range},
        {"paper_range", std::string(paper_range(r.spec.id))},
        {"all_passed", r.all_passed()},
        {"checks", checks},
        {"irreducibility",
         Json{{"status", std::string(to_string(r.irreducibility.status))},
              {"criterion", r.irreducibility.criterion},
              {"factors", factors}}},
    };
    auto optional_int = [](const std::optional<int>& v) { return v ? Json(std::to_string(*v)) : Json(nullptr); };
    j["real_roots"] = optional_int(r.real_roots);
    j["unit_rank"] = optional_int(r.unit_rank);
    j["exceptional_units"] = optional_int(r.exceptional_units);
    j["galois"] = r.galois ? Json(std::string(to_string(*r.galois))) : Json(nullptr);
    j["subfield_d"] = r.subfield_d ? to_json(*r.subfield_d) : Json(nullptr);
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.spec = family_spec_from_json(j.at("spec"));
    r.polynomial = int_poly_from_json(j.at("polynomial"));
    r.in_range = j.at("in_paper_range").get<bool>();
    for (const auto& c : j.at("checks")) {
        r.checks.push_back(CheckResult{c.at("name").get<std::string>(),
                                       parse_check_status(c.at("status").get<std::string>()),
                                       c.at("witness").get<std::string>()});
    }
    const auto& irr = j.at("irreducibility");
    const auto status = irr.at("status").get<std::string>();
    for (auto s : {IrreducibilityStatus::irreducible_proven, IrreducibilityStatus::reducible_with_witness,
                   IrreducibilityStatus::inconclusive}) {
        if (to_string(s) == status) r.irreducibility.status = s;
    }
    r.irreducibility.criterion = irr.at("criterion").get<std::string>();
    for (const auto& f : irr.at("factors")) r.irreducibility.factors.push_back(int_poly_from_json(f));
    auto optional_int = [&](const char* key) -> std::optional<int> {
        const auto& v = j.at(key);
        if (v.is_null()) return std::nullopt;
        return std::stoi(v.get<std::string>());
    };
    r.real_roots = optional_int("real_roots");
    r.unit_rank = optional_int("unit_rank");
    r.exceptional_units = optional_int("exceptional_units");
    if (!j.at("galois").is_null()) r.galois = parse_galois_class(j.at("galois").get<std::string>());
    if (!j.at("subfield_d").is_null()) r.subfield_d = integer_from_json(j.at("subfield_d"));
    return r;
}

Json to_json(const Pell4Solution& s) {
    return Json{{"d", to_string(s.d)}, {"t", to_string(s.t)}, {"s", to_string(s.s)}};
}

Json to_json(const AppendixScan& s) {
    Json hits = Json::array();
    for (const auto& t : s.hits) hits.push_back(to_string(t));
    Json small = Json::array();
    for (const auto& t : s.small_hits) small.push_back(to_string(t));
    return Json{{"hits", hits}, {"small_hits", small}};
}

Json to_json(const CycleTypeProfile& p) {
    Json observed = Json::object();
    for (const auto& [type, count] : p.observed) observed[type] = std::to_string(count);
    Json used = Json::array();
    for (auto q : p.primes_used) used.push_back(std::to_string(q));
    Json skipped = Json::array();
    for (auto q : p.primes_skipped) skipped.push_back(std::to_string(q));
    return Json{{"observed", observed}, {"primes_used", used}, {"primes_skipped", skipped}};
}

Json to_json(const QuarticGaloisData& g) {
    Json roots = Json::array();
    for (const auto& r : g.resolvent_roots) roots.push_back(to_string(r));
    Json j{{"galois", std::string(to_string(g.group))},
           {"discriminant", to_string(g.discriminant)},
           {"discriminant_is_square", g.discriminant_is_square},
           {"resolvent", to_json(g.resolvent)},
           {"resolvent_rational_roots", roots}};
    if (g.first_product) j["resolvent_products"] = Json::array({to_string(*g.first_product), to_string(*g.second_product)});
    return j;
}

Json to_json(const DiscInT& d) {
    Json points = Json::array();
    for (const auto& t : d.verification_points) points.push_back(to_string(t));
    return Json{{"family", to_json(d.family)},
                {"discriminant", to_json(d.poly)},
                {"discriminant_text", d.poly.to_string("t")},
                {"degree_bound_used", std::to_string(d.degree_bound_used)},
                {"verification_points", points}};
}

Json to_json(const KonigReport& k) {
    Json factors = Json::array();
    for (const auto& f : k.factors) {
        Json fj{{"factor", f.factor.to_string("t")}, {"degree_at_most_3", f.degree_at_most_3}};
        fj["irreducible"] = f.irreducible ? Json(*f.irreducible) : Json(nullptr);
        factors.push_back(fj);
    }
    Json samples = Json::array();
    for (const auto& [t, v] : k.samples) samples.push_back(Json::array({to_string(t), to_string(v)}));
    Json primes = Json::array();
    for (const auto& p : k.common_primes) primes.push_back(to_string(p));
    return Json{{"condition_i", std::string(to_string(k.condition_i))},
                {"condition_i_detail", k.detail_i},
                {"condition_ii", std::string(to_string(k.condition_ii))},
                {"factors", factors},
                {"samples", samples},
                {"sample_gcd", to_string(k.sample_gcd)},
                {"common_primes", primes},
                {"passed", k.passed()}};
}

Json to_json(const ReportDocument& doc) {
    Json j = doc.payload.is_object() ? doc.payload : Json::object();
    j["schema_version"] = doc.schema_version;
    j["invocation"] = doc.invocation;
    if (!doc.results.empty()) j["results"] = doc.results;
    return j;
}

ReportDocument document_from_json(const Json& j) {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.invocation = j.at("invocation");
    if (j.contains("results")) doc.results = j.at("results");
    for (const auto& [key, value] : j.items()) {
        if (key != "schema_version" && key != "invocation" && key != "results") doc.payload[key] = value;
    }
    return doc;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports, const std::vector<std::string>& only) {
    std::vector<std::string> columns;
    for (const auto& r : reports) {
        for (const auto& c : r.checks) {
            if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) continue;
            if (std::find(columns.begin(), columns.end(), c.name) == columns.end()) columns.push_back(c.name);
        }
    }
    std::ostringstream os;
    os << "family,params,polynomial,in_paper_range,all_passed";
    for (const auto& c : columns) os << ',' << c;
    os << '\n';
    for (const auto& r : reports) {
        std::string params;
        for (const auto& p : r.spec.params) params += (params.empty() ? "" : ";") + to_string(p);
        os << to_string(r.spec.id) << ',' << params << ',' << r.polynomial.to_string() << ','
           << (r.in_range ? "true" : "false") << ',' << (r.all_passed() ? "true" : "false");
        for (const auto& c : columns) {
            const CheckResult* found = r.find(c);
            os << ',' << (found ? to_string(found->status) : std::string_view(""));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace exunits
