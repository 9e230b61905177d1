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

#include "melem.hpp"

namespace mring {

namespace {

// Quotient by a known divisor.
MonicPoly divide(const MonicPoly& f, const MonicPoly& g) {
  auto q = f.divide_exact(g);
  return std::move(*q);
}

}  // namespace

MElem MElem::make(MonicPoly num, MonicPoly den) {
  MonicPoly g = monic_gcd(num, den);
  if (!g.is_one()) {
    num = divide(num, g);
    den = divide(den, g);
  }
  return MElem(std::move(num), std::move(den));
}

const MElem& MElem::zero() {
  static const MElem z;
  return z;
}

const MElem& MElem::one() {
  static const MElem e = bracket(MonicPoly::linear(Rational(1)));
  return e;
}

const MElem& MElem::x() {
  static const MElem e = bracket(MonicPoly::x_power(1));
  return e;
}

MElem MElem::xn1(std::size_t n) { return bracket(MonicPoly::xn_minus_one(n)); }

MElem MElem::basis(std::size_t n) {
  // gcd(x^n - 1, x^n) = 1, so the fraction is already reduced.
  return MElem(MonicPoly::xn_minus_one(n), MonicPoly::x_power(n));
}

MElem MElem::operator+(const MElem& o) const {
  // Both operands are reduced, so cancellation can only pair our numerator
  // with their denominator and vice versa; clearing those gcds yields a
  // fraction that is already in lowest terms.
  const MonicPoly g1 = monic_gcd(num_, o.den_);
  const MonicPoly g2 = monic_gcd(den_, o.num_);
  MonicPoly n = divide(num_, g1) * divide(o.num_, g2);
  MonicPoly d = divide(den_, g2) * divide(o.den_, g1);
  return MElem(std::move(n), std::move(d));
}

MElem MElem::operator-() const { return MElem(den_, num_); }

MElem MElem::operator*(const MElem& o) const {
  MonicPoly n = root_product(num_, o.num_) * root_product(den_, o.den_);
  MonicPoly d = root_product(num_, o.den_) * root_product(den_, o.num_);
  return make(std::move(n), std::move(d));
}

MElem scalar_mul(const Integer& n, const MElem& r) {
  if (n == 0) return MElem::zero();
  const Integer mag = abs(n);
  const std::size_t e = static_cast<std::size_t>(mag.get_ui());
  // Powers of coprime polynomials stay coprime: no re-reduction needed.
  MElem out(r.num().pow(e), r.den().pow(e));
  return n < 0 ? -out : out;
}

}  // namespace mring
