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

#ifndef MRING_NUMTHEORY_HPP
#define MRING_NUMTHEORY_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace mring {

// Trial-division factorization as (prime, exponent) pairs, ascending.
inline std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::size_t e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (auto [p, e] : factorize(n)) result -= result / p;
  return result;
}

// 0 on a square factor, else (-1)^{#prime factors}.
inline int mobius(std::size_t n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::size_t pk = 1;
    for (std::size_t k = 0; k < e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// p-adic valuation; n must be nonzero.
inline std::size_t padic_valuation(std::size_t n, std::size_t p) {
  std::size_t v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

}  // namespace mring

#endif  // MRING_NUMTHEORY_HPP
