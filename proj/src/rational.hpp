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

#ifndef MRING_RATIONAL_HPP
#define MRING_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace mring {

// Arbitrary-precision scalars. mpq_class keeps the canonical form we need:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q) {
  if (!is_integral(q)) {
    throw Error(errc::invalid_argument, "rational " + q.get_str() + " is not an integer");
  }
  return q.get_num();
}

// Accepts "p" or "p/q" with decimal integers; anything else is rejected.
inline Rational rational_from_string(const std::string& s) {
  auto bad = [&]() -> Error {
    return Error(errc::parse_error, "malformed rational '" + s + "'");
  };
  if (s.empty()) throw bad();
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) throw bad();
  bool seen_slash = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/' && !seen_slash && j > i && j + 1 < s.size()) {
      seen_slash = true;
      continue;
    }
    if (s[j] < '0' || s[j] > '9') throw bad();
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) throw bad();
  if (q.get_den() == 0) throw Error(errc::parse_error, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

// q^e with exact num/den powers (canonical in, canonical out).
inline Rational rational_pow(const Rational& q, std::size_t e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace mring

#endif  // MRING_RATIONAL_HPP
