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

#include "analysis.hpp"

#include <cmath>
#include <set>

#include "cyclo.hpp"
#include "ghost.hpp"

namespace mring {

namespace {

const Real& pi() {
  static const Real value = acos(Real(-1));
  return value;
}

Real frac_dist_to_integer(const Real& y) {
  const Real f = y - floor(y + Real(0.5));
  return abs(f);
}

Complex unit(const Real& angle) {
  const Real theta = 2 * pi() * angle;
  return Complex{cos(theta), sin(theta)};
}

Complex mul(const Complex& a, const Complex& b) {
  return Complex{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Real abs2(const Complex& a) { return a.re * a.re + a.im * a.im; }

// s_0, s_1, ..., s_{count-1} by iterated rotation; the per-step rounding of
// ~2^-133 is far below every tolerance used here.
std::vector<Complex> evaluate_sums(const UnitSum& u, std::size_t count) {
  const std::size_t j_count = u.coeffs.size();
  std::vector<Complex> rot(j_count), pow(j_count, Complex{Real(1), Real(0)});
  for (std::size_t j = 0; j < j_count; ++j) rot[j] = unit(u.angles[j]);
  std::vector<Complex> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    Complex acc;
    for (std::size_t j = 0; j < j_count; ++j) {
      acc.re += u.coeffs[j].re * pow[j].re - u.coeffs[j].im * pow[j].im;
      acc.im += u.coeffs[j].re * pow[j].im + u.coeffs[j].im * pow[j].re;
    }
    out[k] = acc;
    for (std::size_t j = 0; j < j_count; ++j) pow[j] = mul(pow[j], rot[j]);
  }
  return out;
}

}  // namespace

std::size_t dirichlet_shift(const std::vector<Real>& angles, std::size_t q_max) {
  if (angles.empty()) throw Error(errc::invalid_argument, "need at least one angle");
  if (q_max < 2) throw Error(errc::invalid_argument, "q_max must be >= 2");
  const std::size_t j_count = angles.size();
  const Real bound =
      exp(-log(Real(static_cast<unsigned long>(q_max))) / Real(static_cast<long>(j_count + 1)));
  for (std::size_t q = 1; q <= q_max; ++q) {
    bool ok = true;
    for (const Real& x : angles) {
      if (frac_dist_to_integer(Real(static_cast<unsigned long>(q)) * x) > bound) {
        ok = false;
        break;
      }
    }
    if (ok) return q;
  }
  throw Error(errc::not_found, "no shift q <= q_max meets the bound; raise q_max");
}

bool shift_bound_check(const UnitSum& u, std::size_t q, std::size_t k_max) {
  const std::size_t j_count = u.coeffs.size();
  Real coeff_sum = 0;
  for (const Complex& c : u.coeffs) coeff_sum += sqrt(abs2(c));
  const Real bound = 4 * pi() *
                     exp(-log(Real(static_cast<unsigned long>(q))) /
                         Real(static_cast<long>(j_count))) *
                     coeff_sum;
  const std::vector<Complex> s = evaluate_sums(u, k_max + q + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const Complex diff{s[k].re - s[k + q].re, s[k].im - s[k + q].im};
    if (sqrt(abs2(diff)) > bound) return false;
  }
  return true;
}

Real mean_square(const UnitSum& u, std::size_t k_count) {
  if (k_count == 0) throw Error(errc::invalid_argument, "k_count must be >= 1");
  const std::vector<Complex> s = evaluate_sums(u, k_count);
  Real acc = 0;
  for (const Complex& sk : s) acc += abs2(sk);
  return acc / Real(static_cast<unsigned long>(k_count));
}

namespace {

// log |q| through mantissa/exponent splits; safe for values far beyond
// double range.
double log_abs(const Rational& q) {
  signed long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  constexpr double ln2 = 0.6931471805599453;
  return std::log(std::abs(mn)) + static_cast<double>(en) * ln2 -
         (std::log(std::abs(md)) + static_cast<double>(ed) * ln2);
}

}  // namespace

double growth_rate(const MElem& r, std::size_t n_max) {
  if (n_max < 16) throw Error(errc::invalid_argument, "need n_max >= 16");
  const GhostVector t = ghost(r, n_max);
  bool seen = false;
  double best = 0.0;
  for (std::size_t n = n_max - n_max / 2; n <= n_max; ++n) {
    if (t[n] == 0) continue;
    const double v = log_abs(t[n]) / static_cast<double>(n);
    if (!seen || v > best) best = v, seen = true;
  }
  return seen ? std::exp(best) : 0.0;
}

FiniteValuesReport finite_values_unit_roots_demo(const MElem& r, std::size_t k_max) {
  if (!r.has_integer_coeffs())
    throw Error(errc::not_integer_coefficients, "demo requires integer coefficients");
  if (k_max == 0) throw Error(errc::invalid_argument, "k_max must be >= 1");
  const GhostVector t = ghost(r, 2 * k_max);
  std::set<Rational> seen, seen_doubled;
  for (std::size_t k = 1; k <= 2 * k_max; ++k) {
    if (k <= k_max) seen.insert(t[k]);
    seen_doubled.insert(t[k]);
  }
  FiniteValuesReport report;
  report.value_count = seen.size();
  report.member = is_phi_member(r);
  report.bounded = seen.size() == seen_doubled.size();
  report.consistent = report.member == report.bounded;
  return report;
}

}  // namespace mring
