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

#ifndef MRING_CYCLO_HPP
#define MRING_CYCLO_HPP

#include <map>
#include <optional>

#include "ghost.hpp"

namespace mring {

/// Necklace coefficients c_1..c_N of an element: c_n is the Moebius inversion
/// (1/n) sum_{d|n} mu(n/d) t_d. Entries are integral whenever the element has
/// integer coefficients.
class NecklaceVector {
 public:
  explicit NecklaceVector(std::vector<Rational> values) : values_(std::move(values)) {}
  std::size_t size() const { return values_.size(); }
  /// c_n, 1-based.
  const Rational& at(std::size_t n) const { return values_.at(n - 1); }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

/// Element of the completed ring in the basis c_0 [x] + sum c_n [1 - x^{-n}].
/// Only nonzero c_n are stored. A missing level means the support is finite
/// and the representation exact; a finite level marks a truncated view.
struct CompletionElem {
  Integer c0 = 0;
  std::map<std::size_t, Integer> c;
  std::optional<std::size_t> level;

  bool operator==(const CompletionElem&) const = default;
};

NecklaceVector necklace_coeffs(const MElem& r, std::size_t n_max);

/// True when c_n is an integer for every n <= n_max. This always holds for
/// integer-coefficient elements; the routine exists as a test oracle.
/// Throws Error(errc::not_integer_coefficients) on non-integral inputs.
bool integrality_check(const MElem& r, std::size_t n_max);

/// Reversed coefficient stream of f, i.e. the power series x^d f(1/x),
/// truncated at the given order.
std::vector<Rational> reversed_series(const MonicPoly& f, std::size_t order);

/// prod_{n<=order} (1 - x^n)^{c_n} as a truncated power series, with rational
/// exponents handled by the generalized binomial theorem.
std::vector<Rational> cyclotomic_identity_rhs(const NecklaceVector& c, std::size_t order);

/// Checks x^d f(1/x) = prod (1 - x^n)^{c_n} up to the given order, exactly.
bool cyclotomic_identity_check(const MonicPoly& f, std::size_t order);

/// Kronecker test: true iff num and den are both of the form
/// x^a prod Phi_{n_i}. Works by stripping x powers and trial-dividing by
/// every cyclotomic whose totient fits the remaining degree (n enumerated up
/// to 2 deg^2, which covers all candidates since phi(n) >= sqrt(n/2)).
/// Throws Error(errc::not_integer_coefficients) on non-integral inputs.
bool is_phi_member(const MElem& r);

/// Writes a member of the cyclotomic subring as c_0 [x] + sum c_n [1-x^{-n}]
/// by peeling cyclotomic factors, then cross-checks every coefficient against
/// the Moebius inversion of the ghost vector before returning.
/// Throws Error(errc::not_phi_member) when the element is not in the subring.
CompletionElem phi_decompose(const MElem& r);

/// Inverse of phi_decompose on finite-support elements:
/// (c_0 - sum n c_n) [x] + sum c_n [x^n - 1].
MElem completion_reconstruct(const CompletionElem& ce);

/// t_k of a completion element: sum_{d|k} d c_d for k >= 1, c_0 at k = 0.
/// Throws Error(errc::beyond_level) when k exceeds a finite level.
Integer completion_ghost(const CompletionElem& ce, std::size_t k);

CompletionElem completion_add(const CompletionElem& a, const CompletionElem& b);
CompletionElem completion_scalar(const Integer& n, const CompletionElem& a);

/// Product in the completion, truncated at `level`. The basis rule is
/// [1-x^{-n}][1-x^{-m}] = gcd(n,m) [1-x^{-lcm(n,m)}] with [x] idempotent and
/// [x][1-x^{-n}] = 0; truncation is exact at every index <= level because
/// only divisors of an index contribute to it.
CompletionElem completion_mul(const CompletionElem& a, const CompletionElem& b,
                              std::size_t level);

}  // namespace mring

#endif  // MRING_CYCLO_HPP
