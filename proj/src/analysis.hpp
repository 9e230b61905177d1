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

#ifndef MRING_ANALYSIS_HPP
#define MRING_ANALYSIS_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "melem.hpp"

namespace mring {

// 40 decimal digits (~133 bits), comfortably above the 64 fractional bits the
// numeric tolerances assume.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>>;

struct Complex {
  Real re = 0;
  Real im = 0;
};

/// Exponential sum s_k = sum_j c_j theta_j^k with theta_j = exp(2 pi i x_j).
/// Angles x_j live in [0, 1).
struct UnitSum {
  std::vector<Complex> coeffs;
  std::vector<Real> angles;
};

/// Smallest q <= q_max whose multiples q x_j all lie within q_max^(-1/(J+1))
/// of an integer, J = number of angles. Dirichlet's simultaneous
/// approximation theorem guarantees a hit at some q <= q_max^(J/(J+1)), so
/// the scan cannot legitimately run out of range; a miss throws
/// Error(errc::not_found) and signals q_max too small.
std::size_t dirichlet_shift(const std::vector<Real>& angles, std::size_t q_max);

/// Checks |s_k - s_{k+q}| <= 4 pi / q^(1/J) * sum |c_j| for all k <= k_max.
bool shift_bound_check(const UnitSum& u, std::size_t q, std::size_t k_max);

/// (1/K) sum_{k<K} |s_k|^2; approaches sum |c_j|^2 for distinct angles.
Real mean_square(const UnitSum& u, std::size_t k_count);

/// Estimate of the largest root modulus from the ghost tail: the maximum of
/// |t_n|^(1/n) over the last n_max/2 indices. Requires n_max >= 16. Advisory
/// precision only.
double growth_rate(const MElem& r, std::size_t n_max);

struct FiniteValuesReport {
  std::size_t value_count = 0;  // distinct t_k, 1 <= k <= k_max
  bool member = false;          // Kronecker membership of r
  bool bounded = false;         // value set unchanged when k_max doubles
  bool consistent = false;      // member == bounded
};

/// Demonstration harness: a bounded ghost value set should coincide with
/// membership in the cyclotomic subring. Requires integer coefficients.
FiniteValuesReport finite_values_unit_roots_demo(const MElem& r, std::size_t k_max);

}  // namespace mring

#endif  // MRING_ANALYSIS_HPP
