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

#include "ghost.hpp"
#include "test_util.hpp"

using namespace mring;
using mring::testing::Rng;

namespace {

MonicPoly P(std::vector<long> coeffs) {
  std::vector<Rational> q(coeffs.begin(), coeffs.end());
  return MonicPoly::normalize(std::move(q));
}

MElem B(std::vector<long> coeffs) { return MElem::bracket(P(std::move(coeffs))); }

}  // namespace

TEST_CASE("addition multiplies the rational functions") {
  CHECK(B({-2, 1}) + B({-3, 1}) == B({6, -5, 1}));
  // [(x-1)/x] + [x] = [x-1]
  CHECK(MElem::basis(1) + MElem::x() == MElem::one());
  const MElem r = B({6, -5, 1});
  CHECK(r + MElem::zero() == r);
}

TEST_CASE("negation swaps numerator and denominator") {
  const MElem r = B({-2, 1});
  CHECK((-r).num() == MonicPoly::one());
  CHECK((-r).den() == P({-2, 1}));
  CHECK(-MElem::zero() == MElem::zero());
  CHECK(-(-r) == r);
  CHECK(r + (-r) == MElem::zero());
}

TEST_CASE("multiplication on the spec examples") {
  const MElem r = B({6, -5, 1});
  CHECK(MElem::one() * r == r);
  // [x^2-1]*[x^4-1] = [(x^4-1)^2]
  CHECK(MElem::xn1(2) * MElem::xn1(4) == MElem::bracket(MonicPoly::xn_minus_one(4).pow(2)));
  // [(x-1)/x]*[x^2-1] = [(x^2-1)/x^2]
  CHECK(MElem::basis(1) * MElem::xn1(2) == MElem::basis(2));
  CHECK(MElem::x() * MElem::x() == MElem::x());
}

TEST_CASE("scalar multiples") {
  CHECK(scalar_mul(3, B({-2, 1})) == MElem::bracket(P({-2, 1}).pow(3)));
  CHECK(scalar_mul(-1, MElem::x()) == -MElem::x());
  CHECK(scalar_mul(0, B({6, -5, 1})) == MElem::zero());
  CHECK(scalar_mul(-2, B({-2, 1})) == -MElem::bracket(P({-2, 1}).pow(2)));
}

TEST_CASE("equality is structural on canonical forms") {
  CHECK(MElem::xn1(2) == B({-1, 1}) + B({1, 1}));
  CHECK_FALSE(MElem::x() == MElem::one());
  // [(x-1)/(x-1)] reduces to zero.
  CHECK(MElem::make(P({-1, 1}), P({-1, 1})) == MElem::zero());
}

TEST_CASE("commutative ring axioms on random elements") {
  Rng rng(42);
  for (int iter = 0; iter < 15; ++iter) {
    const MElem a = testing::rand_elem(rng, 3, 3);
    const MElem b = testing::rand_elem(rng, 3, 3);
    const MElem c = testing::rand_elem(rng, 2, 2);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + MElem::zero() == a);
    CHECK(a + (-a) == MElem::zero());
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * MElem::one() == a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("zero roots absorb: [x]*r = t_0(r)*[x]") {
  Rng rng(43);
  for (int iter = 0; iter < 10; ++iter) {
    const MElem r = testing::rand_elem(rng, 3, 3);
    CHECK(MElem::x() * r == scalar_mul(Integer(r.degree()), MElem::x()));
  }
}

TEST_CASE("degree map is a ring homomorphism") {
  Rng rng(44);
  for (int iter = 0; iter < 10; ++iter) {
    const MElem a = testing::rand_elem(rng, 3, 3);
    const MElem b = testing::rand_elem(rng, 3, 3);
    CHECK((a + b).degree() == a.degree() + b.degree());
    CHECK((a * b).degree() == a.degree() * b.degree());
  }
}
