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

#include "cyclo.hpp"

#include <numeric>

#include "numtheory.hpp"

namespace mring {

NecklaceVector necklace_coeffs(const MElem& r, std::size_t n_max) {
  const GhostVector t = ghost(r, n_max);
  std::vector<Rational> c(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc = 0;
    for (std::size_t d : divisors(n)) {
      const int mu = mobius(n / d);
      if (mu == 1)
        acc += t[d];
      else if (mu == -1)
        acc -= t[d];
    }
    c[n - 1] = acc / Rational(static_cast<long>(n));
  }
  return NecklaceVector(std::move(c));
}

bool integrality_check(const MElem& r, std::size_t n_max) {
  if (!r.has_integer_coeffs())
    throw Error(errc::not_integer_coefficients,
                "integrality check requires integer coefficients");
  const NecklaceVector c = necklace_coeffs(r, n_max);
  for (const Rational& cn : c.values())
    if (!is_integral(cn)) return false;
  return true;
}

namespace {

std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, std::size_t order) {
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (i >= a.size() || a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// (1 - x^n)^c as a series to the given order; c may be any rational, with
// binom(c, j) = c(c-1)...(c-j+1)/j! built incrementally.
std::vector<Rational> binomial_factor(const Rational& c, std::size_t n, std::size_t order) {
  std::vector<Rational> out(order + 1, Rational(0));
  out[0] = 1;
  Rational binom = 1;
  for (std::size_t j = 1; n * j <= order; ++j) {
    binom *= (c - Rational(static_cast<long>(j) - 1)) / Rational(static_cast<long>(j));
    out[n * j] = (j % 2 ? -binom : binom);
  }
  return out;
}

}  // namespace

std::vector<Rational> reversed_series(const MonicPoly& f, std::size_t order) {
  const std::size_t d = f.degree();
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t j = 0; j <= order && j <= d; ++j) out[j] = f[d - j];
  return out;
}

std::vector<Rational> cyclotomic_identity_rhs(const NecklaceVector& c, std::size_t order) {
  if (c.size() < order)
    throw Error(errc::invalid_argument, "need necklace coefficients up to the order");
  std::vector<Rational> acc(order + 1, Rational(0));
  acc[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    if (c.at(n) == 0) continue;
    acc = series_mul(acc, binomial_factor(c.at(n), n, order), order);
  }
  return acc;
}

bool cyclotomic_identity_check(const MonicPoly& f, std::size_t order) {
  const NecklaceVector c = necklace_coeffs(MElem::bracket(f), order);
  return reversed_series(f, order) == cyclotomic_identity_rhs(c, order);
}

namespace {

struct CycloFactorization {
  std::size_t x_power = 0;
  std::map<std::size_t, std::size_t> factors;  // cyclotomic index -> multiplicity
};

// Full factorization into x^a * prod Phi_n^e, or nullopt if some factor is
// not cyclotomic. Candidates n are enumerated while n <= 2 deg(h)^2 with the
// bound shrinking as factors come off; phi(n) >= sqrt(n/2) makes this
// exhaustive.
std::optional<CycloFactorization> try_factor(const MonicPoly& f) {
  CycloFactorization out;
  out.x_power = f.zero_root_multiplicity();
  MonicPoly h = f.shift_down(out.x_power);
  for (std::size_t n = 1; h.degree() > 0 && n <= 2 * h.degree() * h.degree(); ++n) {
    if (euler_phi(n) > h.degree()) continue;
    while (true) {
      auto q = h.divide_exact(cyclotomic(n));
      if (!q) break;
      h = std::move(*q);
      ++out.factors[n];
      if (h.degree() == 0) break;
    }
  }
  if (h.degree() > 0) return std::nullopt;
  return out;
}

void require_integer_coeffs(const MElem& r, const char* who) {
  if (!r.has_integer_coeffs())
    throw Error(errc::not_integer_coefficients,
                std::string(who) + " requires integer coefficients");
}

}  // namespace

bool is_phi_member(const MElem& r) {
  require_integer_coeffs(r, "membership test");
  return try_factor(r.num()).has_value() && try_factor(r.den()).has_value();
}

CompletionElem phi_decompose(const MElem& r) {
  require_integer_coeffs(r, "decomposition");
  const auto fn = try_factor(r.num());
  const auto fd = try_factor(r.den());
  if (!fn || !fd)
    throw Error(errc::not_phi_member, "element has a root off the unit circle and zero");

  // Each factor Phi_n contributes sum_{d|n} mu(n/d) [x^d - 1]; in the
  // [1 - x^{-d}] basis that is the same sum plus phi(n) copies of [x], which
  // the fixed c_0 = t_0(r) already accounts for.
  CompletionElem ce;
  ce.c0 = r.degree();
  auto absorb = [&ce](const CycloFactorization& fac, int sign) {
    for (const auto& [n, mult] : fac.factors) {
      for (std::size_t d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu == 0) continue;
        ce.c[d] += Integer(sign * mu) * Integer(static_cast<unsigned long>(mult));
      }
    }
  };
  absorb(*fn, +1);
  absorb(*fd, -1);
  std::erase_if(ce.c, [](const auto& kv) { return kv.second == 0; });

  // The constructive peel-off and the Moebius inversion of the ghost vector
  // must produce identical coefficients.
  const std::size_t n_max = ce.c.empty() ? 0 : ce.c.rbegin()->first;
  if (n_max > 0) {
    const NecklaceVector nv = necklace_coeffs(r, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto it = ce.c.find(n);
      const Rational expected = it == ce.c.end() ? Rational(0) : Rational(it->second);
      if (nv.at(n) != expected)
        throw Error(errc::invalid_argument, "decomposition cross-check failed");
    }
  }
  return ce;
}

MElem completion_reconstruct(const CompletionElem& ce) {
  Integer x_coef = ce.c0;
  for (const auto& [n, cn] : ce.c) x_coef -= Integer(static_cast<unsigned long>(n)) * cn;
  MElem out = scalar_mul(x_coef, MElem::x());
  for (const auto& [n, cn] : ce.c) out = out + scalar_mul(cn, MElem::xn1(n));
  return out;
}

Integer completion_ghost(const CompletionElem& ce, std::size_t k) {
  if (ce.level && k > *ce.level)
    throw Error(errc::beyond_level, "ghost index exceeds the truncation level");
  if (k == 0) return ce.c0;
  Integer acc = 0;
  for (std::size_t d : divisors(k)) {
    const auto it = ce.c.find(d);
    if (it != ce.c.end()) acc += Integer(static_cast<unsigned long>(d)) * it->second;
  }
  return acc;
}

namespace {

std::optional<std::size_t> min_level(const std::optional<std::size_t>& a,
                                     const std::optional<std::size_t>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

void trim_to_level(CompletionElem& ce) {
  if (!ce.level) return;
  std::erase_if(ce.c, [&](const auto& kv) { return kv.first > *ce.level; });
}

}  // namespace

CompletionElem completion_add(const CompletionElem& a, const CompletionElem& b) {
  CompletionElem out;
  out.c0 = a.c0 + b.c0;
  out.c = a.c;
  for (const auto& [n, cn] : b.c) out.c[n] += cn;
  std::erase_if(out.c, [](const auto& kv) { return kv.second == 0; });
  out.level = min_level(a.level, b.level);
  trim_to_level(out);
  return out;
}

CompletionElem completion_scalar(const Integer& n, const CompletionElem& a) {
  CompletionElem out;
  out.level = a.level;
  if (n == 0) return out;
  out.c0 = n * a.c0;
  for (const auto& [k, ck] : a.c) out.c.emplace(k, n * ck);
  return out;
}

// Basis product rule, derived from [x^n-1][x^m-1] = gcd(n,m) [x^lcm(n,m)-1]
// and [x^n-1][x] = n[x]: writing [1-x^{-n}] = [x^n-1] - n[x] and expanding,
// the cross terms collapse to -nm[x] = -gcd*lcm[x], leaving
// gcd(n,m) ([x^lcm-1] - lcm[x]) = gcd(n,m) [1-x^{-lcm}].
CompletionElem completion_mul(const CompletionElem& a, const CompletionElem& b,
                              std::size_t level) {
  CompletionElem out;
  out.c0 = a.c0 * b.c0;
  bool discarded = false;
  for (const auto& [n, cn] : a.c) {
    for (const auto& [m, cm] : b.c) {
      const std::size_t l = std::lcm(n, m);
      if (l > level) {
        discarded = true;
        continue;
      }
      out.c[l] += Integer(static_cast<unsigned long>(std::gcd(n, m))) * cn * cm;
    }
  }
  std::erase_if(out.c, [](const auto& kv) { return kv.second == 0; });
  const auto operand_level = min_level(a.level, b.level);
  if (operand_level || discarded)
    out.level = operand_level ? std::min(*operand_level, level) : level;
  trim_to_level(out);
  return out;
}

}  // namespace mring
