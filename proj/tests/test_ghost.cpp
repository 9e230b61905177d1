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

GhostVector G(std::vector<long> values) { return GhostVector(values.begin(), values.end()); }

}  // namespace

TEST_CASE("power sums of polynomials") {
  CHECK(power_sums(P({2, -3, 1}), 3) == G({2, 3, 5, 9}));      // roots 1,2: t_k = 1+2^k
  CHECK(power_sums(P({0, 1}), 3) == G({1, 0, 0, 0}));          // t_0 is the degree map
  CHECK(power_sums(MonicPoly::xn_minus_one(3), 6) == G({3, 0, 0, 3, 0, 0, 3}));
  CHECK(power_sums(MonicPoly::one(), 4) == G({0, 0, 0, 0, 0}));
}

TEST_CASE("coefficients from power sums") {
  CHECK(poly_from_power_sums(G({2, 3, 5}), 2) == P({2, -3, 1}));
  CHECK(poly_from_power_sums(G({1, 7}), 1) == P({-7, 1}));
  CHECK(poly_from_power_sums(G({0}), 0) == MonicPoly::one());
  CHECK_THROWS_AS(poly_from_power_sums(G({3, 1, 1}), 2), Error);  // t_0 != degree
}

TEST_CASE("Newton roundtrip on random polynomials up to degree 12") {
  Rng rng(123);
  for (int iter = 0; iter < 60; ++iter) {
    const MonicPoly f = testing::rand_monic_upto(rng, 12, 9);
    CHECK(poly_from_power_sums(power_sums(f, f.degree()), f.degree()) == f);
  }
}

TEST_CASE("tail equivalence: leading coefficients match iff power sums match") {
  Rng rng(321);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t d = static_cast<std::size_t>(testing::rand_int(rng, 1, 8));
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, d));
    MonicPoly f = testing::rand_monic(rng, d, 5);
    // Same degree, top n-1 coefficients copied: e_k agree for k < n.
    std::vector<Rational> g_coeffs = f.coeffs();
    for (std::size_t i = 0; i + n < g_coeffs.size(); ++i)
      g_coeffs[i] = testing::rand_int(rng, -5, 5);
    const MonicPoly g = MonicPoly::from_monic(std::move(g_coeffs));

    const GhostVector tf = power_sums(f, d), tg = power_sums(g, d);
    bool e_agree = true;
    for (std::size_t k = 1; k < n; ++k)
      if (f[d - k] != g[d - k]) e_agree = false;
    bool t_agree = true;
    for (std::size_t k = 1; k < n; ++k)
      if (tf[k] != tg[k]) t_agree = false;
    CHECK(e_agree);
    CHECK(t_agree);

    // Reverse direction: whenever t_1..t_m agree, e_1..e_m agree.
    std::size_t first_t = d + 1, first_e = d + 1;
    for (std::size_t k = 1; k <= d; ++k) {
      if (tf[k] != tg[k]) {
        first_t = k;
        break;
      }
    }
    for (std::size_t k = 1; k <= d; ++k) {
      if (f[d - k] != g[d - k]) {
        first_e = k;
        break;
      }
    }
    CHECK(first_t == first_e);
  }
}

TEST_CASE("ghost vectors of elements") {
  CHECK(ghost(MElem::basis(2), 4) == G({0, 0, 2, 0, 2}));
  CHECK(ghost(MElem::zero(), 3) == G({0, 0, 0, 0}));
  CHECK(ghost(MElem::bracket(P({-2, 1})), 4) == G({1, 2, 4, 8, 16}));
}

TEST_CASE("ghost homomorphism law") {
  Rng rng(5150);
  for (int iter = 0; iter < 12; ++iter) {
    const MElem a = testing::rand_elem(rng, 3, 3);
    const MElem b = testing::rand_elem(rng, 3, 3);
    const std::size_t n = 12;
    const GhostVector ta = ghost(a, n), tb = ghost(b, n);
    const GhostVector tsum = ghost(a + b, n), tprod = ghost(a * b, n);
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(tsum[k] == ta[k] + tb[k]);
      CHECK(tprod[k] == ta[k] * tb[k]);
    }
  }
}

TEST_CASE("ghost distance") {
  CHECK(ghost_distance(MElem::one(), MElem::bracket(P({-2, 1}))) == Rational(1, 2));
  CHECK(ghost_distance(MElem::x(), MElem::one()) == Rational(1, 2));
  const MElem r = MElem::bracket(P({6, -5, 1}));
  CHECK(ghost_distance(r, r) == 0);
  // Same degree and trace, different t_2.
  CHECK(ghost_distance(MElem::bracket(P({1, -3, 1})), MElem::bracket(P({2, -3, 1}))) ==
        Rational(1, 4));
}

TEST_CASE("ghost distance is an ultrametric") {
  Rng rng(90125);
  for (int iter = 0; iter < 20; ++iter) {
    const MElem a = testing::rand_elem(rng, 3, 2);
    const MElem b = testing::rand_elem(rng, 3, 2);
    const MElem c = testing::rand_elem(rng, 3, 2);
    CHECK(ghost_distance(a, c) <= std::max(ghost_distance(a, b), ghost_distance(b, c)));
    CHECK(ghost_distance(a, b) == ghost_distance(b, a));
  }
}

TEST_CASE("adams operations") {
  CHECK(adams(MElem::bracket(P({-3, 1})), 2) == MElem::bracket(P({-9, 1})));
  CHECK(adams(MElem::bracket(P({2, -3, 1})), 2) == MElem::bracket(P({4, -5, 1})));
  // lambda_0(r) = t_0(r) [x-1]
  Rng rng(777);
  for (int iter = 0; iter < 8; ++iter) {
    const MElem r = testing::rand_elem(rng, 3, 3);
    CHECK(adams(r, 0) == scalar_mul(Integer(r.degree()), MElem::one()));
  }
}

TEST_CASE("adams reindexing and composition") {
  Rng rng(888);
  for (int iter = 0; iter < 10; ++iter) {
    const MElem r = testing::rand_elem(rng, 3, 3);
    const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 4));
    const std::size_t m = static_cast<std::size_t>(testing::rand_int(rng, 1, 3));
    const std::size_t k_max = 6;
    const GhostVector t_img = ghost(adams(r, n), k_max);
    const GhostVector t_r = ghost(r, n * k_max);
    CHECK(t_img[0] == t_r[0]);
    for (std::size_t k = 1; k <= k_max; ++k) CHECK(t_img[k] == t_r[n * k]);
    CHECK(adams(adams(r, n), m) == adams(r, n * m));
  }
}

TEST_CASE("tail ideal membership is structural") {
  CHECK(in_tail_ideal(MElem::zero(), 0));
  CHECK(in_tail_ideal(MElem::zero(), 5));
  CHECK(in_tail_ideal(MElem::x(), 1));
  CHECK(in_tail_ideal(scalar_mul(-3, MElem::x()), 2));
  CHECK_FALSE(in_tail_ideal(MElem::one(), 1));
  CHECK_FALSE(in_tail_ideal(MElem::x(), 0));
  CHECK_FALSE(in_tail_ideal(MElem::bracket(P({-2, 1})), 4));
}
