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

#include "ghost.hpp"

#include <algorithm>
#include <cassert>

namespace mring {

namespace {

// e_j(f) for j = 0..deg f, from f = sum_n (-1)^(d-n) e_{d-n} x^n: the
// coefficient of x^(d-j) is (-1)^j e_j.
std::vector<Rational> elementary_coeffs(const MonicPoly& f) {
  const std::size_t d = f.degree();
  std::vector<Rational> e(d + 1);
  for (std::size_t j = 0; j <= d; ++j) e[j] = (j % 2 ? -f[d - j] : f[d - j]);
  return e;
}

}  // namespace

GhostVector power_sums(const MonicPoly& f, std::size_t n_max) {
  const std::size_t d = f.degree();
  const std::vector<Rational> e = elementary_coeffs(f);
  GhostVector t(n_max + 1);
  t[0] = static_cast<long>(d);
  // k e_k = sum_{n=1}^{k} (-1)^(n+1) e_{k-n} t_n holds for every k >= 1 once
  // e_j = 0 for j > d, so one loop covers both regimes.
  for (std::size_t k = 1; k <= n_max; ++k) {
    Rational acc = k <= d ? Rational(static_cast<long>(k)) * e[k] : Rational(0);
    const std::size_t n_lo = k > d ? k - d : 1;
    for (std::size_t n = n_lo; n <= k - 1; ++n) {
      const Rational& ekn = e[k - n];
      if (ekn == 0) continue;
      if (n % 2)
        acc -= ekn * t[n];
      else
        acc += ekn * t[n];
    }
    t[k] = (k % 2 ? acc : -acc);
  }
  return t;
}

MonicPoly poly_from_power_sums(const GhostVector& t, std::size_t degree) {
  if (t.size() < degree + 1)
    throw Error(errc::invalid_argument, "need power sums t_0..t_degree");
  if (t[0] != Rational(static_cast<long>(degree)))
    throw Error(errc::inconsistent_degree, "t_0 does not match the requested degree");
  std::vector<Rational> e(degree + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= degree; ++k) {
    Rational acc = 0;
    for (std::size_t n = 1; n <= k; ++n) {
      if (n % 2)
        acc += e[k - n] * t[n];
      else
        acc -= e[k - n] * t[n];
    }
    e[k] = acc / Rational(static_cast<long>(k));
  }
  std::vector<Rational> coeffs(degree + 1);
  for (std::size_t j = 0; j <= degree; ++j)
    coeffs[degree - j] = (j % 2 ? -e[j] : e[j]);
  return MonicPoly::from_monic(std::move(coeffs));
}

GhostVector ghost(const MElem& r, std::size_t n_max) {
  GhostVector tn = power_sums(r.num(), n_max);
  const GhostVector td = power_sums(r.den(), n_max);
  for (std::size_t k = 0; k <= n_max; ++k) tn[k] -= td[k];
  return tn;
}

Rational ghost_entry(const MElem& r, std::size_t k) { return ghost(r, k)[k]; }

Rational ghost_distance(const MElem& a, const MElem& b) {
  if (a == b) return Rational(0);
  // Cross-multiplied numerators a.num*b.den and b.num*a.den are distinct
  // monic polynomials, so their power sums (and hence the ghost vectors)
  // first differ at some index bounded by the larger of the two degrees.
  const std::size_t bound =
      std::max(a.num().degree() + b.den().degree(), b.num().degree() + a.den().degree());
  const GhostVector ta = ghost(a, bound), tb = ghost(b, bound);
  for (std::size_t k = 0; k <= bound; ++k) {
    if (ta[k] != tb[k]) return Rational(1) / rational_pow(Rational(2), k);
  }
  assert(false && "distinct elements must differ within the degree bound");
  return Rational(0);
}

MElem adams(const MElem& r, std::size_t n) {
  return MElem::make(power_roots(r.num(), n), power_roots(r.den(), n));
}

namespace {

bool is_x_power(const MonicPoly& f) { return f.zero_root_multiplicity() == f.degree(); }

}  // namespace

bool in_tail_ideal(const MElem& r, std::size_t n) {
  if (n == 0) return r.is_zero();
  return is_x_power(r.num()) && is_x_power(r.den());
}

}  // namespace mring
