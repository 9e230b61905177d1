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

#include "serialize.hpp"

#include "parser.hpp"

namespace mring {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(errc::parse_error, "malformed JSON: " + what);
}

Integer integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  malformed(std::string(what) + " must be an integer");
}

std::int64_t integer_to_int64(const Integer& n, const char* what) {
  if (!n.fits_slong_p())
    throw Error(errc::invalid_argument, std::string(what) + " exceeds the JSON integer range");
  return n.get_si();
}

}  // namespace

json poly_to_json(const MonicPoly& p) {
  json arr = json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(rational_to_string(c));
  return arr;
}

MonicPoly poly_from_json(const json& j) {
  if (!j.is_array() || j.empty()) malformed("polynomial must be a nonempty array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_string()) malformed("polynomial coefficients must be rational strings");
    coeffs.push_back(rational_from_string(entry.get<std::string>()));
  }
  if (coeffs.back() != 1) malformed("polynomial is not monic");
  return MonicPoly::from_monic(std::move(coeffs));
}

json elem_to_json(const MElem& r) {
  return json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

MElem elem_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    malformed("element must be an object with 'num' and 'den'");
  // make() re-reduces, so non-canonical input is accepted and canonicalized.
  return MElem::make(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json ghost_to_json(const GhostVector& t) {
  json arr = json::array();
  for (const Rational& v : t) arr.push_back(rational_to_string(v));
  return arr;
}

json necklace_to_json(const NecklaceVector& c) {
  json arr = json::array();
  for (const Rational& v : c.values()) arr.push_back(rational_to_string(v));
  return arr;
}

json completion_to_json(const CompletionElem& ce) {
  json cmap = json::object();
  for (const auto& [n, cn] : ce.c)
    cmap[std::to_string(n)] = integer_to_int64(cn, "completion coefficient");
  json out{{"c0", integer_to_int64(ce.c0, "c0")}, {"c", std::move(cmap)}};
  if (ce.level)
    out["level"] = static_cast<std::int64_t>(*ce.level);
  else
    out["level"] = nullptr;
  return out;
}

CompletionElem completion_from_json(const json& j) {
  if (!j.is_object() || !j.contains("c0") || !j.contains("c"))
    malformed("completion element must be an object with 'c0' and 'c'");
  CompletionElem ce;
  ce.c0 = integer_from_json(j.at("c0"), "c0");
  if (!j.at("c").is_object()) malformed("'c' must be an object");
  for (const auto& [key, value] : j.at("c").items()) {
    std::size_t n = 0;
    try {
      n = std::stoull(key);
    } catch (const std::exception&) {
      malformed("'c' key '" + key + "' is not a positive integer");
    }
    if (n == 0) malformed("'c' keys must be >= 1");
    const Integer cn = integer_from_json(value, "completion coefficient");
    if (cn == 0) malformed("zero values are forbidden in 'c'");
    ce.c.emplace(n, cn);
  }
  if (j.contains("level") && !j.at("level").is_null()) {
    const Integer level = integer_from_json(j.at("level"), "level");
    if (level < 1) malformed("level must be >= 1");
    ce.level = static_cast<std::size_t>(level.get_ui());
    if (!ce.c.empty() && ce.c.rbegin()->first > *ce.level)
      malformed("support exceeds the declared level");
  }
  return ce;
}

json endo_to_json(const EndoSpec& spec) {
  if (const auto* a = std::get_if<AdamsShift>(&spec)) {
    return json{{"variant", "adams_shift"},
                {"k", static_cast<std::int64_t>(a->k)},
                {"s", static_cast<std::int64_t>(a->s)}};
  }
  const auto& g = std::get<GcdFold>(spec);
  return json{{"variant", "gcd_fold"}, {"N", static_cast<std::int64_t>(g.modulus)}};
}

EndoSpec endo_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variant")) malformed("endo spec needs a 'variant'");
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "adams_shift") {
    if (!j.contains("k") || !j.contains("s")) malformed("adams_shift needs 'k' and 's'");
    const Integer k = integer_from_json(j.at("k"), "k");
    const Integer s = integer_from_json(j.at("s"), "s");
    if (k < 0 || s < 0) malformed("'k' and 's' must be nonnegative");
    return AdamsShift{static_cast<std::size_t>(k.get_ui()),
                      static_cast<std::size_t>(s.get_ui())};
  }
  if (variant == "gcd_fold") {
    if (!j.contains("N")) malformed("gcd_fold needs 'N'");
    const Integer n = integer_from_json(j.at("N"), "N");
    if (n < 1) malformed("'N' must be >= 1");
    return GcdFold{static_cast<std::size_t>(n.get_ui())};
  }
  malformed("unknown variant '" + variant + "'");
}

json verify_report_to_json(const VerifyReport& report) {
  json arr = json::array();
  for (const LawCheck& check : report.checks) {
    json entry{{"law", check.law}, {"pass", check.pass}};
    entry["witness"] = check.witness ? elem_to_json(*check.witness) : json(nullptr);
    arr.push_back(std::move(entry));
  }
  return arr;
}

json star_report_to_json(const StarReport& report) {
  json arr = json::array();
  for (const StarVerdict& v : report.verdicts)
    arr.push_back(json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  return arr;
}

json demo_report_to_json(const FiniteValuesReport& report) {
  return json{{"values", static_cast<std::int64_t>(report.value_count)},
              {"member", report.member},
              {"consistent", report.consistent}};
}

}  // namespace mring
