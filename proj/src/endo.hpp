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

#ifndef MRING_ENDO_HPP
#define MRING_ENDO_HPP

#include <functional>
#include <string>
#include <variant>

#include "cyclo.hpp"

namespace mring {

/// lambda_k plus a degree shift: r -> lambda_k(r) + (t_s(r) - t_0(r)) [x].
/// Ghost indices map as n -> k n for n >= 1 and 0 -> s. k = 0 degenerates to
/// t_0(r)[x-1] + (t_s(r) - t_0(r))[x].
struct AdamsShift {
  std::size_t k = 1;
  std::size_t s = 0;
  bool operator==(const AdamsShift&) const = default;
};

/// Folds every ghost index onto its gcd with a fixed modulus: the image is
/// the unique element with t_0 unchanged and t_n = t_gcd(n, modulus). Defined
/// on integer-coefficient elements; every image lands in the cyclotomic
/// subring with roots dividing x^modulus - 1.
struct GcdFold {
  std::size_t modulus = 1;
  bool operator==(const GcdFold&) const = default;
};

using EndoSpec = std::variant<AdamsShift, GcdFold>;

/// The ghost-index map phi^*: t_n(phi(r)) = t_{phi^*(n)}(r).
std::size_t endo_star(const EndoSpec& spec, std::size_t n);

/// Applies the endomorphism. Throws Error(errc::non_integral_shift) when an
/// AdamsShift with s >= 1 meets t_s(r) - t_0(r) not an integer, and
/// Error(errc::non_integral_image) when a GcdFold meets a non-integral
/// necklace coefficient.
MElem endo_apply(const EndoSpec& spec, const MElem& r);

struct LawCheck {
  std::string law;
  bool pass = false;
  std::optional<MElem> witness;  // offending input, present on failure
};

struct VerifyReport {
  std::vector<LawCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Exact endomorphism laws over the samples: additivity and multiplicativity
/// on consecutive pairs, phi([x-1]) = [x-1], and the ghost factorization
/// t_n(phi(r)) = t_{star(n)}(r) for 0 <= n <= n_max.
VerifyReport verify_endomorphism(const std::function<MElem(const MElem&)>& apply,
                                 const std::function<std::size_t(std::size_t)>& star,
                                 const std::vector<MElem>& samples, std::size_t n_max);

VerifyReport endo_verify(const EndoSpec& spec, const std::vector<MElem>& samples,
                         std::size_t n_max);

/// The four elements an endomorphism may send [x] to.
enum class XImage { X, Zero, XMinus1, XMinus1OverX, Invalid };
XImage classify_image_of_x(const MElem& m);

/// Structure check for the image of [x^{p^alpha} - 1] under a continuous map
/// into the cyclotomic subring: the decomposition must be supported on
/// p-powers up to p^alpha with c_{p^beta} = s_beta p^(alpha-beta) and
/// s_beta in {-1, 0, 1}. The [x]-coefficient s_minus_inf is reported but not
/// constrained.
struct PrimePowerForm {
  bool ok = false;
  std::string violation;  // names the violated clause when !ok
  Integer s_minus_inf = 0;
  std::vector<int> s;  // s_0..s_alpha
};
PrimePowerForm prime_power_form_check(const CompletionElem& ce, std::size_t p,
                                      std::size_t alpha);

/// phi^*(n) tabulated for n = 0..N.
struct StarTable {
  std::vector<std::size_t> entries;
};
StarTable star_table(const EndoSpec& spec, std::size_t n_max);

struct StarVerdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct StarReport {
  std::vector<StarVerdict> verdicts;
  bool all_pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
};

/// Necessary conditions on a star table: (a) a zero at any index >= 1 forces
/// zeros everywhere; (b) when phi^*(1) != 0, phi^*(n)/phi^*(1) is
/// multiplicative on coprime pairs and sends prime powers to prime powers;
/// (c) v_p(phi^*(k)) depends only on v_p(k).
StarReport star_checks(const StarTable& table);

}  // namespace mring

#endif  // MRING_ENDO_HPP
