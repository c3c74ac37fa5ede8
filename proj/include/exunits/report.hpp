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

#ifndef EXUNITS_REPORT_HPP
#define EXUNITS_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "exunits/families.hpp"
#include "exunits/galois4.hpp"
#include "exunits/monodisc.hpp"
#include "exunits/quadsub.hpp"

namespace exunits {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Machine-readable forms. Every integer is written as a decimal string so
// that consumers limited to 64-bit numbers never truncate.
Json to_json(const Integer& n);
Integer integer_from_json(const Json& j);
Json to_json(const IntPoly& p);  // {"coefficients": [...ascending], "text": "..."}
IntPoly int_poly_from_json(const Json& j);

Json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

Json to_json(const Pell4Solution& s);
Json to_json(const AppendixScan& s);
Json to_json(const CycleTypeProfile& p);
Json to_json(const QuarticGaloisData& g);
Json to_json(const DiscInT& d);
Json to_json(const KonigReport& k);

/// Top-level output document. `results` holds per-instance payloads for
/// sweeps; single-answer commands put their fields in `payload`, which is
/// merged into the top-level object.
struct ReportDocument {
    std::string schema_version = kSchemaVersion;
    Json invocation = Json::object();
    Json results = Json::array();
    Json payload = Json::object();
};

Json to_json(const ReportDocument& doc);
ReportDocument document_from_json(const Json& j);

/// One row per report with a column per check; only the listed checks when
/// `only` is nonempty.
std::string reports_to_csv(const std::vector<VerificationReport>& reports, const std::vector<std::string>& only = {});

}  // namespace exunits

#endif
