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

#include "poly.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <utility>

#include "numtheory.hpp"

namespace mring {
namespace {

using QV = std::vector<Rational>;
using ZV = std::vector<Integer>;

void strip(QV& v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
}

bool is_zero_vec(const QV& v) { return v.size() == 1 && v[0] == 0; }

QV qv_mul(const QV& a, const QV& b) {
  QV out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Long division over Q; b must be stripped and nonzero. Both outputs stripped.
std::pair<QV, QV> qv_divmod(QV a, const QV& b) {
  strip(a);
  const std::size_t db = b.size() - 1;
  if (a.size() - 1 < db || is_zero_vec(a)) return {QV{Rational(0)}, std::move(a)};
  QV q(a.size() - db, Rational(0));
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    Rational coef = a[i] / b[db];
    q[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= coef * b[j];
  }
  a.resize(db == 0 ? 1 : db);
  if (a.empty()) a.push_back(Rational(0));
  strip(a);
  strip(q);
  return {std::move(q), std::move(a)};
}

// Newton divided-difference interpolation through (xs[i], ys[i]); the xs must
// be pairwise distinct.
QV interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n; i-- > j;) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  QV out{ys[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    out = qv_mul(out, QV{-xs[i], Rational(1)});
    out[0] += ys[i];
  }
  strip(out);
  return out;
}

// ---- integer-coefficient machinery for the subresultant gcd ----

void zstrip(ZV& v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
}

Integer zv_content(const ZV& v) {
  Integer g = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zv_divexact_scalar(ZV& v, const Integer& d) {
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Primitive part with positive leading coefficient.
ZV zv_primitive(ZV v) {
  zstrip(v);
  Integer c = zv_content(v);
  if (c == 0) return v;
  if (v.back() < 0) c = -c;
  zv_divexact_scalar(v, c);
  return v;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z.
ZV zv_pseudo_rem(ZV a, const ZV& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  long steps = static_cast<long>(a.size() - 1) - static_cast<long>(db) + 1;
  while (a.size() - 1 >= db && !(a.size() == 1 && a[0] == 0)) {
    const std::size_t shift = a.size() - 1 - db;
    Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    zstrip(a);
    --steps;
    if (a.size() == 1 && a[0] == 0) break;
  }
  // A degree drop of more than one skips iterations; make up the factors so
  // the result is exactly lc(b)^(delta+1) * a mod b.
  for (; steps > 0; --steps)
    for (auto& c : a) c *= lb;
  return a;
}

// Subresultant polynomial remainder sequence; inputs primitive, deg a >= deg b >= 1.
ZV z_gcd_prs(ZV a, ZV b) {
  Integer g = 1, h = 1;
  while (true) {
    const std::size_t delta = (a.size() - 1) - (b.size() - 1);
    ZV r = zv_pseudo_rem(a, b);
    if (r.size() == 1 && r[0] == 0) return zv_primitive(std::move(b));
    if (r.size() == 1) return ZV{Integer(1)};
    Integer divisor = g;
    for (std::size_t i = 0; i < delta; ++i) divisor *= h;
    zv_divexact_scalar(r, divisor);
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta >= 1) {
      Integer gn;
      mpz_pow_ui(gn.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      for (std::size_t i = 0; i + 1 < delta; ++i)
        mpz_divexact(gn.get_mpz_t(), gn.get_mpz_t(), h.get_mpz_t());
      h = gn;
    }
  }
}

// Clears denominators and removes integer content; sign follows the lc.
ZV qv_to_primitive_int(const QV& v) {
  Integer l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZV out;
  out.reserve(v.size());
  for (const auto& c : v) {
    Rational s = c * Rational(l);
    assert(is_integral(s));
    out.push_back(s.get_num());
  }
  return zv_primitive(std::move(out));
}

}  // namespace

MonicPoly MonicPoly::normalize(std::vector<Rational> raw) {
  if (raw.empty()) throw Error(errc::zero_polynomial, "empty coefficient list");
  strip(raw);
  if (is_zero_vec(raw)) throw Error(errc::zero_polynomial, "zero polynomial has no monic form");
  const Rational lead = raw.back();
  if (lead != 1)
    for (auto& c : raw) c /= lead;
  return MonicPoly(std::move(raw));
}

MonicPoly MonicPoly::from_monic(std::vector<Rational> coeffs) {
  assert(!coeffs.empty() && coeffs.back() == 1);
  return MonicPoly(std::move(coeffs));
}

const MonicPoly& MonicPoly::one() {
  static const MonicPoly unit(QV{Rational(1)});
  return unit;
}

MonicPoly MonicPoly::x_power(std::size_t a) {
  QV c(a + 1, Rational(0));
  c.back() = 1;
  return MonicPoly(std::move(c));
}

MonicPoly MonicPoly::linear(const Rational& root) { return MonicPoly(QV{-root, Rational(1)}); }

MonicPoly MonicPoly::xn_minus_one(std::size_t n) {
  assert(n >= 1);
  QV c(n + 1, Rational(0));
  c[0] = -1;
  c.back() = 1;
  return MonicPoly(std::move(c));
}

bool MonicPoly::has_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (!is_integral(c)) return false;
  return true;
}

std::size_t MonicPoly::zero_root_multiplicity() const {
  std::size_t a = 0;
  while (a < degree() && coeffs_[a] == 0) ++a;
  return a;
}

Rational MonicPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

MonicPoly MonicPoly::operator*(const MonicPoly& g) const {
  return MonicPoly(qv_mul(coeffs_, g.coeffs_));
}

MonicPoly MonicPoly::pow(std::size_t e) const {
  MonicPoly acc = one();
  MonicPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

std::optional<MonicPoly> MonicPoly::divide_exact(const MonicPoly& g) const {
  if (g.degree() > degree()) return std::nullopt;
  auto [q, r] = qv_divmod(coeffs_, g.coeffs_);
  if (!is_zero_vec(r)) return std::nullopt;
  return MonicPoly(std::move(q));
}

MonicPoly MonicPoly::shift_down(std::size_t a) const {
  assert(zero_root_multiplicity() >= a);
  QV c(coeffs_.begin() + static_cast<std::ptrdiff_t>(a), coeffs_.end());
  return MonicPoly(std::move(c));
}

MonicPoly monic_gcd(const MonicPoly& f, const MonicPoly& g) {
  if (f.is_one() || g.is_one()) return MonicPoly::one();
  ZV a = qv_to_primitive_int(f.coeffs());
  ZV b = qv_to_primitive_int(g.coeffs());
  if (a.size() < b.size()) std::swap(a, b);
  ZV d = z_gcd_prs(std::move(a), std::move(b));
  QV out;
  out.reserve(d.size());
  for (const auto& c : d) out.emplace_back(c);
  return MonicPoly::normalize(std::move(out));
}

Rational resultant(std::vector<Rational> a, std::vector<Rational> b) {
  strip(a);
  strip(b);
  if (is_zero_vec(a) || is_zero_vec(b)) return Rational(0);
  Rational acc = 1;
  while (b.size() > 1) {
    auto [q, r] = qv_divmod(a, b);
    if (is_zero_vec(r)) return Rational(0);
    const std::size_t da = a.size() - 1, db = b.size() - 1, dr = r.size() - 1;
    if ((da & 1) && (db & 1)) acc = -acc;
    acc *= rational_pow(b.back(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
  acc *= rational_pow(b[0], a.size() - 1);
  return acc;
}

namespace {

// Integer sample points 0, 1, -1, 2, -2, ...
Rational sample_point(std::size_t i) {
  const long k = static_cast<long>((i + 1) / 2);
  return Rational(i % 2 ? k : -k);
}

}  // namespace

MonicPoly root_product(const MonicPoly& f, const MonicPoly& g) {
  const std::size_t a = f.zero_root_multiplicity();
  const std::size_t b = g.zero_root_multiplicity();
  const MonicPoly f1 = f.shift_down(a);
  const MonicPoly g1 = g.shift_down(b);
  const std::size_t d1 = f1.degree(), d2 = g1.degree();
  const std::size_t zeros = a * g.degree() + b * d1;
  if (d1 == 0 || d2 == 0) return MonicPoly::x_power(zeros);

  const std::size_t dr = d1 * d2;
  std::vector<Rational> xs, ys;
  xs.reserve(dr + 1);
  ys.reserve(dr + 1);
  for (std::size_t i = 0; i <= dr; ++i) {
    const Rational x0 = sample_point(i);
    // G(x0, y) = y^d2 * g1(x0/y): coefficient of y^(d2-j) is g1[j] * x0^j.
    QV G(d2 + 1, Rational(0));
    Rational p = 1;
    for (std::size_t j = 0; j <= d2; ++j) {
      G[d2 - j] = g1[j] * p;
      p *= x0;
    }
    xs.push_back(x0);
    ys.push_back(resultant(f1.coeffs(), std::move(G)));
  }
  QV r = interpolate(xs, std::move(ys));
  assert(r.size() - 1 == dr);
  QV shifted(zeros, Rational(0));
  shifted.insert(shifted.end(), r.begin(), r.end());
  return MonicPoly::normalize(std::move(shifted));
}

MonicPoly power_roots(const MonicPoly& f, std::size_t n) {
  const std::size_t d = f.degree();
  if (n == 0) return MonicPoly::linear(Rational(1)).pow(d);
  if (n == 1 || d == 0) return f;
  std::vector<Rational> xs, ys;
  xs.reserve(d + 1);
  ys.reserve(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    const Rational x0 = sample_point(i);
    QV B(n + 1, Rational(0));
    B[0] = x0;
    B[n] = -1;
    xs.push_back(x0);
    ys.push_back(resultant(f.coeffs(), std::move(B)));
  }
  QV r = interpolate(xs, std::move(ys));
  assert(r.size() - 1 == d);
  return MonicPoly::normalize(std::move(r));
}

namespace {

std::map<std::size_t, MonicPoly>& cyclotomic_cache() {
  static std::map<std::size_t, MonicPoly> cache;
  return cache;
}

// Assumes the cache mutex is held.
const MonicPoly& cyclotomic_locked(std::size_t n) {
  auto& cache = cyclotomic_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  MonicPoly acc = MonicPoly::xn_minus_one(n);
  for (std::size_t d : divisors(n)) {
    if (d == n) continue;
    auto q = acc.divide_exact(cyclotomic_locked(d));
    assert(q.has_value());
    acc = std::move(*q);
  }
  return cache.emplace(n, std::move(acc)).first->second;
}

}  // namespace

const MonicPoly& cyclotomic(std::size_t n) {
  if (n == 0) throw Error(errc::invalid_argument, "cyclotomic index must be >= 1");
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(n);
}

}  // namespace mring
