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

#include "parser.hpp"
#include "test_util.hpp"

using namespace mring;

namespace {

MElem E(const char* text) { return eval(*parse(text)); }

MonicPoly P(std::vector<long> coeffs) {
  std::vector<Rational> q(coeffs.begin(), coeffs.end());
  return MonicPoly::normalize(std::move(q));
}

}  // namespace

TEST_CASE("basic atoms") {
  CHECK(E("[x-2]") == MElem::bracket(P({-2, 1})));
  CHECK(E("[x^2-3x+2]") == MElem::bracket(P({2, -3, 1})));
  CHECK(E("[2x+2]") == MElem::bracket(P({1, 1})));       // scaling preserves roots
  CHECK(E("[-x^2+5x-6]") == MElem::bracket(P({6, -5, 1})));
  CHECK(E("[x^2+1/x]") == MElem::make(P({1, 0, 1}), P({0, 1})));
  CHECK(E("[1]") == MElem::zero());
  CHECK(E("cyc(4)") == MElem::bracket(cyclotomic(4)));
  CHECK(E("xn1(3)") == MElem::xn1(3));
  CHECK(E("b(2)") == MElem::basis(2));
  CHECK(E("[3*x + 1]") == MElem::bracket(P({1, 3})));
}

TEST_CASE("operator structure") {
  const ExprPtr e = parse("[x-2] + 3*[x^3-1]");
  CHECK(e->kind == Expr::Kind::Add);
  CHECK(e->kids[0]->kind == Expr::Kind::Atom);
  CHECK(e->kids[1]->kind == Expr::Kind::Scalar);
  CHECK(e->kids[1]->factor == 3);

  CHECK(E("[x-2] + 3*[x^3-1]") ==
        MElem::bracket(P({-2, 1})) + scalar_mul(3, MElem::xn1(3)));
  // b(4) - b(2) = [x^2+1] - 2[x]
  CHECK(E("b(4) - b(2)") ==
        MElem::bracket(P({1, 0, 1})) - scalar_mul(2, MElem::x()));
  CHECK(E("b(4) - b(2)") == E("[x^2+1] - 2*[x]"));
  CHECK(E("-[x-2]") == -MElem::bracket(P({-2, 1})));
  CHECK(E("[x-2]*[x-3]") == E("[x-6]"));
  CHECK(E("2*[x-1] + [x]*[x]") == E("[x^2-2x+1]") + MElem::x());
}

TEST_CASE("precedence: scalar and unary bind tighter than product, product than sum") {
  CHECK(E("2*[x-2]*[x-3]") == scalar_mul(2, MElem::bracket(P({-2, 1}))) *
                                  MElem::bracket(P({-3, 1})));
  // Product is the root product: [x-3]*[x-4] = [x-12].
  CHECK(E("[x-2] + [x-3]*[x-4]") ==
        MElem::bracket(P({-2, 1})) + MElem::bracket(P({-12, 1})));
  CHECK(E("([x-2] + [x-3])*[x-4]") == E("[x^2-5x+6]*[x-4]"));
  CHECK(E("-[x-2] + [x-2]") == MElem::zero());
}

TEST_CASE("parse errors carry position and expectation") {
  CHECK_THROWS_AS(parse("[x^2-3x+2"), ParseError);
  try {
    parse("[x^2-3x+2");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 10);
    CHECK(e.expected() == "']'");
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("[0]"), ParseError);       // zero polynomial
  CHECK_THROWS_AS(parse("[x-2] ["), ParseError);   // trailing garbage
  CHECK_THROWS_AS(parse("3"), ParseError);         // bare scalar
  CHECK_THROWS_AS(parse("cyc(0)"), ParseError);
  CHECK_THROWS_AS(parse("foo(3)"), ParseError);
  CHECK_THROWS_AS(parse("[x^-2]"), ParseError);    // negative exponent
  CHECK_THROWS_AS(parse("[x/x/x]"), ParseError);
  CHECK_THROWS_AS(parse("2*"), ParseError);
}

TEST_CASE("printer round-trips the AST") {
  for (const char* text :
       {"[x-2] + 3*[x^3-1]", "b(4) - b(2)", "-[x-2]*([x] + cyc(6))",
        "2*(3*[x^2-3x+2])", "[x^2+1/x] - xn1(2)*b(3)", "[x-2] - [x-3] - [x-4]",
        "-(-[x])", "1000000000000000000000*[x-1]"}) {
    const ExprPtr once = parse(text);
    const ExprPtr twice = parse(to_string(*once));
    CHECK(*once == *twice);
  }
}

TEST_CASE("element formatting reparses to the same element") {
  mring::testing::Rng rng(4004);
  for (int iter = 0; iter < 20; ++iter) {
    const MElem r = mring::testing::rand_elem(rng, 4, 4);
    CHECK(E(format(r).c_str()) == r);
  }
  CHECK(format(MElem::zero()) == "[1]");
  CHECK(format(MElem::basis(2)) == "[x^2-1/x^2]");
  CHECK(format(MElem::bracket(P({6, -5, 1}))) == "[x^2-5x+6]");
}
