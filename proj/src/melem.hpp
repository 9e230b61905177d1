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

#ifndef MRING_MELEM_HPP
#define MRING_MELEM_HPP

#include "poly.hpp"

namespace mring {

/// Element of the ring of monic-polynomial ratios, kept as a reduced fraction
/// so that ring equality is structural equality.
///
/// Ring structure: addition multiplies the underlying rational functions,
/// negation swaps numerator and denominator, and multiplication extends the
/// pairwise root product bilinearly. The additive identity is [1/1]; the
/// multiplicative identity is [x-1].
class MElem {
 public:
  MElem() : num_(MonicPoly::one()), den_(MonicPoly::one()) {}

  /// Reduces num/den to lowest terms.
  static MElem make(MonicPoly num, MonicPoly den);
  static MElem bracket(MonicPoly f) { return MElem(std::move(f), MonicPoly::one()); }

  static const MElem& zero();
  static const MElem& one();             // [x-1]
  static const MElem& x();               // [x]
  static MElem xn1(std::size_t n);       // [x^n - 1]
  static MElem basis(std::size_t n);     // [1 - x^{-n}] = [(x^n-1)/x^n]

  const MonicPoly& num() const { return num_; }
  const MonicPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_one() && den_.is_one(); }
  bool has_integer_coeffs() const {
    return num_.has_integer_coeffs() && den_.has_integer_coeffs();
  }

  /// deg num - deg den; this is the ghost component t_0.
  long degree() const {
    return static_cast<long>(num_.degree()) - static_cast<long>(den_.degree());
  }

  MElem operator+(const MElem& o) const;
  MElem operator-() const;
  MElem operator-(const MElem& o) const { return *this + (-o); }
  MElem operator*(const MElem& o) const;

  bool operator==(const MElem&) const = default;

 private:
  MElem(MonicPoly num, MonicPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  friend MElem scalar_mul(const Integer& n, const MElem& r);
  MonicPoly num_;
  MonicPoly den_;
};

/// n-fold sum of r (the underlying rational function raised to the n-th
/// power); negative n goes through the additive inverse.
MElem scalar_mul(const Integer& n, const MElem& r);

}  // namespace mring

#endif  // MRING_MELEM_HPP
