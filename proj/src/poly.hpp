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

#ifndef MRING_POLY_HPP
#define MRING_POLY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace mring {

/// Monic polynomial over Q with coefficients stored ascending.
///
/// Degree 0 is the constant 1 (the empty product of linear factors); the zero
/// polynomial is not representable. All values are immutable after
/// construction and every operation is a pure function.
class MonicPoly {
 public:
  /// Divides out the leading coefficient, which preserves the root multiset.
  /// Throws Error(errc::zero_polynomial) when every coefficient is zero.
  static MonicPoly normalize(std::vector<Rational> raw);

  /// Wraps coefficients that are already monic (asserted).
  static MonicPoly from_monic(std::vector<Rational> coeffs);

  static const MonicPoly& one();
  static MonicPoly x_power(std::size_t a);
  static MonicPoly linear(const Rational& root);  // x - root
  static MonicPoly xn_minus_one(std::size_t n);   // n >= 1

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_one() const { return coeffs_.size() == 1; }
  bool has_integer_coeffs() const;

  /// Multiplicity of the root 0 (number of trailing zero coefficients).
  std::size_t zero_root_multiplicity() const;

  Rational operator()(const Rational& x) const;

  MonicPoly operator*(const MonicPoly& g) const;
  MonicPoly pow(std::size_t e) const;

  /// Exact quotient by g, or nullopt when g does not divide *this.
  std::optional<MonicPoly> divide_exact(const MonicPoly& g) const;

  /// Quotient by x^a; requires a zero root of at least that multiplicity.
  MonicPoly shift_down(std::size_t a) const;

  bool operator==(const MonicPoly&) const = default;

 private:
  explicit MonicPoly(std::vector<Rational> c) : coeffs_(std::move(c)) {}
  std::vector<Rational> coeffs_;
};

/// Monic gcd over Q. Denominators are cleared and the subresultant PRS runs
/// over Z, which keeps intermediate coefficient growth polynomial.
MonicPoly monic_gcd(const MonicPoly& f, const MonicPoly& g);

/// The monic polynomial of degree deg f * deg g whose root multiset is
/// { alpha*beta : f(alpha) = 0, g(beta) = 0 }.
///
/// Zero roots are stripped first: with f = x^a f1, g = x^b g1 and
/// f1(0), g1(0) != 0, the result is x^(a deg g + b deg f1) * R(x) where
/// R = Res_y(f1(y), y^(deg g1) g1(x/y)). The resultant in y is obtained by
/// exact evaluation at deg f1 * deg g1 + 1 points followed by interpolation;
/// each point value is a univariate resultant computed by a Euclidean
/// remainder sequence over Q. No floating point is involved anywhere.
MonicPoly root_product(const MonicPoly& f, const MonicPoly& g);

/// Roots raised to the n-th power: Res_y(f(y), x - y^n), normalized monic.
/// n = 0 sends every root to 1 (convention 0^0 = 1), giving (x-1)^deg f.
MonicPoly power_roots(const MonicPoly& f, std::size_t n);

/// n-th cyclotomic polynomial, n >= 1. Computed by exact division of x^n - 1
/// by the proper-divisor cyclotomics; memoized behind a mutex so concurrent
/// callers are safe.
const MonicPoly& cyclotomic(std::size_t n);

/// Resultant of two polynomials given by ascending coefficient vectors.
/// Exposed for cross-checks in tests.
Rational resultant(std::vector<Rational> a, std::vector<Rational> b);

}  // namespace mring

#endif  // MRING_POLY_HPP
