// Copyright 2026 The mring Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MRING_SERIALIZE_HPP
#define MRING_SERIALIZE_HPP

#include <json.hpp>

#include "analysis.hpp"
#include "endo.hpp"

namespace mring {

using json = nlohmann::json;

// Wire formats (object keys serialize sorted, so output is byte-stable):
//   polynomial      ascending array of rational strings, e.g. ["6","-5","1"]
//   element         {"num": [...], "den": [...]}
//   ghost vector    array of rational strings, index = k
//   necklace vector array of rational strings, index = n - 1
//   completion      {"c0": int, "c": {"n": int, ...}, "level": int|null}
//   endo spec       {"variant":"adams_shift","k":int,"s":int}
//                   or {"variant":"gcd_fold","N":int}
//   verify report   [{"law": str, "pass": bool, "witness": element|null}, ...]
//   demo report     {"values": int, "member": bool, "consistent": bool}

json poly_to_json(const MonicPoly& p);
MonicPoly poly_from_json(const json& j);

json elem_to_json(const MElem& r);
MElem elem_from_json(const json& j);

json ghost_to_json(const GhostVector& t);
json necklace_to_json(const NecklaceVector& c);

json completion_to_json(const CompletionElem& ce);
CompletionElem completion_from_json(const json& j);

json endo_to_json(const EndoSpec& spec);
EndoSpec endo_from_json(const json& j);

json verify_report_to_json(const VerifyReport& report);
json star_report_to_json(const StarReport& report);
json demo_report_to_json(const FiniteValuesReport& report);

}  // namespace mring

#endif  // MRING_SERIALIZE_HPP
