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

#include "exunits/expr.hpp"
#include "exunits/report.hpp"
#include "support/gen.hpp"

using namespace exunits;

TEST_CASE("expression parser") {
    CHECK(parse_int_poly("x^2") == IntPoly::monomial(Integer(1), 2));
    CHECK(parse_int_poly("1-x") == IntPoly{Integer(1), Integer(-1)});
    CHECK(parse_int_poly(" -3x^2 + 2(x+1) ") == IntPoly{Integer(2), Integer(2), Integer(-3)});
    CHECK(parse_int_poly("(x-1)^2(x+1)") == IntPoly{Integer(1), Integer(-1), Integer(-1), Integer(1)});
    CHECK(parse_int_poly("x*x*x") == IntPoly::monomial(Integer(1), 3));
    CHECK(parse_int_poly("4t^2+25", 't') == IntPoly{Integer(25), Integer(0), Integer(4)});
    CHECK(parse_int_poly("010") == IntPoly{Integer(10)});
    CHECK(parse_int_poly("123456789012345678901234567890x") ==
          IntPoly{Integer(0), Integer("123456789012345678901234567890")});
    for (const char* bad : {"", "x^", "x+", "(x+1", "x)", "y", "x^-1", "2..", "x^100000"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_int_poly(bad), ParseError);
    }
}

TEST_CASE("integer lists and ranges") {
    CHECK(parse_integer_list("1,-4,-1,4,1") == std::vector<Integer>{1, -4, -1, 4, 1});
    CHECK(parse_integer_list(" 7 ") == std::vector<Integer>{7});
    CHECK_THROWS_AS(parse_integer_list("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_integer_list("1,a"), ParseError);
    CHECK(parse_range("4:100") == std::pair<Integer, Integer>{4, 100});
    CHECK(parse_range("7") == std::pair<Integer, Integer>{7, 7});
    CHECK(parse_range("-1:3") == std::pair<Integer, Integer>{-1, 3});
    CHECK(parse_range("-5:-2") == std::pair<Integer, Integer>{-5, -2});
    CHECK_THROWS_AS(parse_range("5:4"), ParseError);
    CHECK_THROWS_AS(parse_range("4:"), ParseError);
}

TEST_CASE("integers serialize as decimal strings") {
    const Integer huge("-98765432109876543210987654321098765432109876543210");
    const Json j = to_json(huge);
    CHECK(j.is_string());
    CHECK(integer_from_json(j) == huge);
    const IntPoly p{huge, Integer(0), Integer(1)};
    const Json pj = to_json(p);
    CHECK(pj["coefficients"][0] == to_string(huge));
    CHECK(int_poly_from_json(pj) == p);
}

TEST_CASE("reports round-trip losslessly") {
    const std::vector<FamilySpec> specs = {
        {FamilyId::f, {Integer(4)}},
        {FamilyId::f, {Integer(2)}},
        {FamilyId::h, {Integer("1000000000000")}},
        {FamilyId::g, {Integer(4), Integer(9)}},
        {FamilyId::F, {Integer(3), Integer(1), Integer(2)}},
        {FamilyId::niklasch_smart, {Integer(5)}},
    };
    for (const auto& s : specs) {
        const VerificationReport r = verify(s);
        const Json j = to_json(r);
        const VerificationReport back = report_from_json(j);
        CHECK(back.spec == r.spec);
        CHECK(back.polynomial == r.polynomial);
        CHECK(back.checks == r.checks);
        CHECK(back.galois == r.galois);
        CHECK(back.subfield_d == r.subfield_d);
        CHECK(back.irreducibility.factors == r.irreducibility.factors);
        CHECK(to_json(back) == j);
        // through text as well
        CHECK(to_json(report_from_json(Json::parse(j.dump()))) == j);
    }
}

TEST_CASE("documents merge payload keys and round-trip") {
    ReportDocument doc;
    doc.invocation = Json{{"command", "embed"}, {"d", "7"}};
    doc.payload = Json{{"t", "16"}, {"s", "6"}, {"d", "7"}};
    const Json j = to_json(doc);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["t"] == "16");
    CHECK_FALSE(j.contains("results"));
    const ReportDocument back = document_from_json(Json::parse(j.dump()));
    CHECK(back.payload == doc.payload);
    CHECK(back.invocation == doc.invocation);
    CHECK(to_json(back) == j);
    // deterministic serialization
    CHECK(j.dump() == to_json(document_from_json(j)).dump());
}

TEST_CASE("csv layout") {
    const std::vector<VerificationReport> rs = {verify({FamilyId::f, {Integer(4)}}), verify({FamilyId::f, {Integer(2)}})};
    const std::string csv = reports_to_csv(rs);
    const auto first_nl = csv.find('\n');
    const std::string header = csv.substr(0, first_nl);
    CHECK(header.rfind("family,params,polynomial,in_paper_range,all_passed,irreducible,", 0) == 0);
    CHECK(csv.find("\nf,4,x^4-4x^3-x^2+4x+1,true,true,pass,") != std::string::npos);
    CHECK(csv.find("\nf,2,x^4-2x^3-x^2+2x+1,false,false,fail,") != std::string::npos);
    const std::string only = reports_to_csv(rs, {"galois"});
    CHECK(only == "family,params,polynomial,in_paper_range,all_passed,galois\n"
                  "f,4,x^4-4x^3-x^2+4x+1,true,true,pass\n"
                  "f,2,x^4-2x^3-x^2+2x+1,false,false,fail\n");
}

TEST_CASE("payload serializers use strings for numbers") {
    const Json pell = to_json(Pell4Solution{Integer(7), Integer(16), Integer(6)});
    CHECK(pell == Json{{"d", "7"}, {"t", "16"}, {"s", "6"}});
    AppendixScan scan;
    scan.hits = {Integer(3)};
    CHECK(to_json(scan)["hits"] == Json::array({"3"}));
}
