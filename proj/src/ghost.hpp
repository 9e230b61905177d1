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

#ifndef MRING_GHOST_HPP
#define MRING_GHOST_HPP

#include "melem.hpp"

namespace mring {

/// Power-sum coordinates t_0..t_N; index k holds t_k. t_0 is the degree map
/// (convention 0^0 = 1), so entry 0 is an integer for every element.
using GhostVector = std::vector<Rational>;

/// Power sums of the roots of f up to index n_max, via Newton's identities.
/// For k <= deg f the coefficient recurrence is inverted for t_k; beyond the
/// degree the same linear recurrence continues with the missing elementary
/// coefficients set to zero.
GhostVector power_sums(const MonicPoly& f, std::size_t n_max);

/// The unique monic polynomial of the given degree whose first power sums are
/// t_1..t_degree. Requires t.size() >= degree + 1 and t_0 == degree
/// (Error(errc::inconsistent_degree) otherwise).
MonicPoly poly_from_power_sums(const GhostVector& t, std::size_t degree);

/// t_k(r) for k = 0..n_max, extended from polynomials by linearity:
/// componentwise power sums of the numerator minus those of the denominator.
GhostVector ghost(const MElem& r, std::size_t n_max);

/// Single coordinate t_k(r).
Rational ghost_entry(const MElem& r, std::size_t k);

/// 0 when the elements are equal, otherwise 2^-m where m is the first index
/// at which the ghost vectors differ (finite for distinct elements).
Rational ghost_distance(const MElem& a, const MElem& b);

/// Adams operation: every root raised to the n-th power. n = 0 collapses to
/// t_0(r)[x-1] under the 0^0 = 1 convention.
MElem adams(const MElem& r, std::size_t n);

/// Membership in I_N = { r : t_k(r) = 0 for all k >= N }. For N >= 1 this is
/// a structural check: an element with any nonzero root has infinitely many
/// nonzero ghost entries, so membership means r is an integer multiple of [x].
bool in_tail_ideal(const MElem& r, std::size_t n);

}  // namespace mring

#endif  // MRING_GHOST_HPP
