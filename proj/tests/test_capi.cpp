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

#include <mring/mring.h>

#include <string>

extern "C" int mring_c_compat_smoke(void);

namespace {

struct ElemHandle {
  mring_elem* ptr = nullptr;
  explicit ElemHandle(const char* text) { REQUIRE(mring_elem_parse(text, &ptr) == MRING_OK); }
  ElemHandle() = default;
  ~ElemHandle() { mring_elem_free(ptr); }
  ElemHandle(const ElemHandle&) = delete;
  ElemHandle& operator=(const ElemHandle&) = delete;
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  mring_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("header is consumable from plain C") { CHECK(mring_c_compat_smoke() == 1); }

TEST_CASE("parse, format and JSON round-trip") {
  ElemHandle e("[x^2-5x+6/x]");
  CHECK(take(mring_elem_format(e.ptr)) == "[x^2-5x+6/x]");
  const std::string j = take(mring_elem_to_json(e.ptr));
  CHECK(j == R"({"den":["0","1"],"num":["6","-5","1"]})");
  mring_elem* back = nullptr;
  REQUIRE(mring_elem_from_json(j.c_str(), &back) == MRING_OK);
  CHECK(mring_elem_eq(e.ptr, back) == 1);
  mring_elem_free(back);
}

TEST_CASE("parse errors set the status and message") {
  mring_elem* out = nullptr;
  CHECK(mring_elem_parse("[x^2-", &out) == MRING_ERR_PARSE);
  CHECK(std::string(mring_last_error()).find("parse error") != std::string::npos);
  CHECK(out == nullptr);
  CHECK(mring_elem_parse(nullptr, &out) == MRING_ERR_INVALID);
  CHECK(mring_elem_from_json("{not json", &out) == MRING_ERR_PARSE);
}

TEST_CASE("ring operations through the C surface") {
  ElemHandle a("[x-2]"), b("[x-3]");
  mring_elem* prod = nullptr;
  REQUIRE(mring_elem_mul(a.ptr, b.ptr, &prod) == MRING_OK);
  CHECK(take(mring_elem_format(prod)) == "[x-6]");
  mring_elem_free(prod);

  mring_elem* neg = nullptr;
  REQUIRE(mring_elem_neg(a.ptr, &neg) == MRING_OK);
  CHECK(take(mring_elem_format(neg)) == "[1/x-2]");
  mring_elem_free(neg);

  mring_elem* tripled = nullptr;
  REQUIRE(mring_elem_scalar(3, a.ptr, &tripled) == MRING_OK);
  CHECK(take(mring_elem_format(tripled)) == "[x^3-6x^2+12x-8]");
  mring_elem_free(tripled);

  mring_elem* squared = nullptr;
  REQUIRE(mring_elem_adams(a.ptr, 2, &squared) == MRING_OK);
  CHECK(take(mring_elem_format(squared)) == "[x-4]");
  mring_elem_free(squared);

  CHECK(mring_elem_eq(a.ptr, b.ptr) == 0);
  CHECK(mring_elem_eq(a.ptr, nullptr) == -1);
}

TEST_CASE("ghost, necklace, membership, decomposition") {
  ElemHandle e("[x-2]");
  char* out = nullptr;
  REQUIRE(mring_ghost_json(e.ptr, 4, &out) == MRING_OK);
  CHECK(take(out) == R"(["1","2","4","8","16"])");
  out = nullptr;
  REQUIRE(mring_necklace_json(e.ptr, 6, &out) == MRING_OK);
  CHECK(take(out) == R"(["2","1","2","3","6","9"])");

  int member = -1;
  REQUIRE(mring_phi_member(e.ptr, &member) == MRING_OK);
  CHECK(member == 0);

  ElemHandle gauss("[x^2+1]");
  REQUIRE(mring_phi_member(gauss.ptr, &member) == MRING_OK);
  CHECK(member == 1);
  mring_completion* ce = nullptr;
  REQUIRE(mring_decompose(gauss.ptr, &ce) == MRING_OK);
  CHECK(take(mring_completion_to_json(ce)) == R"({"c":{"2":-1,"4":1},"c0":2,"level":null})");
  mring_completion_free(ce);

  // Domain errors surface as MRING_ERR_DOMAIN.
  mring_completion* bad = nullptr;
  CHECK(mring_decompose(e.ptr, &bad) == MRING_ERR_DOMAIN);
  ElemHandle half("[2x-1]");
  CHECK(mring_phi_member(half.ptr, &member) == MRING_ERR_DOMAIN);
}

TEST_CASE("cyclotomic identity through the C surface") {
  ElemHandle f("[x-2]");
  int holds = -1;
  REQUIRE(mring_cyclo_identity(f.ptr, 3, &holds) == MRING_OK);
  CHECK(holds == 1);
  ElemHandle fraction("[x-2/x]");
  CHECK(mring_cyclo_identity(fraction.ptr, 3, &holds) == MRING_ERR_DOMAIN);
}

TEST_CASE("endomorphisms through the C surface") {
  ElemHandle e("[x-2]");
  mring_elem* image = nullptr;
  REQUIRE(mring_endo_apply(R"({"variant":"gcd_fold","N":2})", e.ptr, &image) == MRING_OK);
  CHECK(take(mring_elem_format(image)) == "[x^4-2x^3+2x-1/x^3]");
  mring_elem_free(image);

  REQUIRE(mring_endo_apply(R"({"variant":"adams_shift","k":2,"s":1})", e.ptr, &image) ==
          MRING_OK);
  CHECK(take(mring_elem_format(image)) == "[x^2-4x]");
  mring_elem_free(image);

  CHECK(mring_endo_apply(R"({"variant":"nope"})", e.ptr, &image) == MRING_ERR_PARSE);

  ElemHandle b("[x-3]");
  const mring_elem* samples[] = {e.ptr, b.ptr};
  char* report = nullptr;
  REQUIRE(mring_endo_verify(R"({"variant":"adams_shift","k":2,"s":0})", samples, 2, 8,
                            &report) == MRING_OK);
  const std::string r = take(report);
  CHECK(r.find(R"("law":"identity","pass":true)") != std::string::npos);
  CHECK(r.find(R"("pass":false)") == std::string::npos);

  // Non-integral shift on a non-integer element propagates as a domain error.
  ElemHandle half("[2x-1]");
  CHECK(mring_endo_apply(R"({"variant":"adams_shift","k":1,"s":1})", half.ptr, &image) ==
        MRING_ERR_DOMAIN);
}

TEST_CASE("dirichlet and demo through the C surface") {
  const double angles[] = {0.30103};
  unsigned long q = 0;
  REQUIRE(mring_dirichlet_shift(angles, 1, 100, &q) == MRING_OK);
  CHECK(q == 3);

  const double two[] = {0.5, 1.0 / 3.0};
  REQUIRE(mring_dirichlet_shift(two, 2, 100, &q) == MRING_OK);
  CHECK(q == 6);

  ElemHandle e("xn1(6)");
  char* out = nullptr;
  REQUIRE(mring_demo_json(e.ptr, 100, &out) == MRING_OK);
  CHECK(take(out) == R"({"consistent":true,"member":true,"values":2})");
}
