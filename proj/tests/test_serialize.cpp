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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serialize.hpp"
#include "test_util.hpp"

using namespace mring;
using mring::testing::Rng;

TEST_CASE("polynomial wire format") {
  const MonicPoly p = MonicPoly::normalize({Rational(6), Rational(-5), Rational(1)});
  CHECK(poly_to_json(p).dump() == R"(["6","-5","1"])");
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK_THROWS_AS(poly_from_json(json::array()), Error);
  CHECK_THROWS_AS(poly_from_json(json::parse(R"(["6","-5","2"])")), Error);  // not monic
  CHECK_THROWS_AS(poly_from_json(json::parse(R"(["x","1"])")), Error);

  // Rational coefficients use the "p/q" form.
  const MonicPoly h = MonicPoly::linear(Rational(1, 2));
  CHECK(poly_to_json(h).dump() == R"(["-1/2","1"])");
  CHECK(poly_from_json(poly_to_json(h)) == h);
}

TEST_CASE("element round-trip is canonical") {
  Rng rng(555);
  for (int iter = 0; iter < 25; ++iter) {
    const MElem r = testing::rand_elem(rng, 4, 4);
    CHECK(elem_from_json(elem_to_json(r)) == r);
  }
  // Non-reduced input is canonicalized on load.
  const json j{{"num", json::array({"-1", "0", "1"})}, {"den", json::array({"-1", "1"})}};
  CHECK(elem_from_json(j) == MElem::bracket(MonicPoly::normalize({Rational(1), Rational(1)})));
}

TEST_CASE("completion wire format") {
  CompletionElem ce;
  ce.c0 = 2;
  ce.c.emplace(2, Integer(-1));
  ce.c.emplace(4, Integer(1));
  CHECK(completion_to_json(ce).dump() == R"({"c":{"2":-1,"4":1},"c0":2,"level":null})");
  CHECK(completion_from_json(completion_to_json(ce)) == ce);

  ce.level = 8;
  CHECK(completion_from_json(completion_to_json(ce)) == ce);

  CHECK_THROWS_AS(completion_from_json(json::parse(R"({"c0":0,"c":{"2":0}})")), Error);
  CHECK_THROWS_AS(completion_from_json(json::parse(R"({"c0":0,"c":{"0":1}})")), Error);
  CHECK_THROWS_AS(completion_from_json(json::parse(R"({"c0":0,"c":{"9":1},"level":4})")),
                  Error);
}

TEST_CASE("endomorphism wire format") {
  const EndoSpec adams = AdamsShift{2, 1};
  CHECK(endo_to_json(adams).dump() == R"({"k":2,"s":1,"variant":"adams_shift"})");
  CHECK(endo_from_json(endo_to_json(adams)) == adams);

  const EndoSpec fold = GcdFold{6};
  CHECK(endo_to_json(fold).dump() == R"({"N":6,"variant":"gcd_fold"})");
  CHECK(endo_from_json(endo_to_json(fold)) == fold);

  CHECK_THROWS_AS(endo_from_json(json::parse(R"({"variant":"frobenius"})")), Error);
  CHECK_THROWS_AS(endo_from_json(json::parse(R"({"variant":"gcd_fold","N":0})")), Error);
  CHECK_THROWS_AS(endo_from_json(json::parse(R"({"variant":"adams_shift","k":2})")), Error);
}

TEST_CASE("report formats") {
  VerifyReport report;
  report.checks.push_back({"identity", true, std::nullopt});
  report.checks.push_back({"additivity", false, MElem::x()});
  const json j = verify_report_to_json(report);
  CHECK(j.size() == 2);
  CHECK(j[0]["witness"].is_null());
  CHECK(j[1]["pass"] == false);
  CHECK(j[1]["witness"]["num"] == json::array({"0", "1"}));

  FiniteValuesReport demo;
  demo.value_count = 2;
  demo.member = true;
  demo.bounded = true;
  demo.consistent = true;
  CHECK(demo_report_to_json(demo).dump() == R"({"consistent":true,"member":true,"values":2})");
}

TEST_CASE("ghost and necklace arrays") {
  const GhostVector t{Rational(1), Rational(2), Rational(1, 3)};
  CHECK(ghost_to_json(t).dump() == R"(["1","2","1/3"])");
  const NecklaceVector c({Rational(2), Rational(1)});
  CHECK(necklace_to_json(c).dump() == R"(["2","1"])");
}
