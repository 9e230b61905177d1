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

#include "endo.hpp"

#include <numeric>

#include "numtheory.hpp"

namespace mring {

std::size_t endo_star(const EndoSpec& spec, std::size_t n) {
  if (const auto* a = std::get_if<AdamsShift>(&spec)) return n == 0 ? a->s : a->k * n;
  const auto& g = std::get<GcdFold>(spec);
  return n == 0 ? 0 : std::gcd(n, g.modulus);
}

namespace {

MElem apply_adams_shift(const AdamsShift& a, const MElem& r) {
  MElem image = adams(r, a.k);
  if (a.s == 0) return image;
  const GhostVector t = ghost(r, a.s);
  const Rational shift = t[a.s] - t[0];
  if (!is_integral(shift))
    throw Error(errc::non_integral_shift,
                "t_" + std::to_string(a.s) + " - t_0 = " + shift.get_str() +
                    " is not an integer");
  return image + scalar_mul(shift.get_num(), MElem::x());
}

MElem apply_gcd_fold(const GcdFold& g, const MElem& r) {
  const NecklaceVector c = necklace_coeffs(r, g.modulus);
  MElem out = scalar_mul(Integer(r.degree()), MElem::x());
  for (std::size_t e : divisors(g.modulus)) {
    const Rational& ce = c.at(e);
    if (!is_integral(ce))
      throw Error(errc::non_integral_image,
                  "necklace coefficient c_" + std::to_string(e) + " = " + ce.get_str() +
                      " is not an integer");
    if (ce != 0) out = out + scalar_mul(ce.get_num(), MElem::basis(e));
  }
  return out;
}

}  // namespace

MElem endo_apply(const EndoSpec& spec, const MElem& r) {
  if (const auto* a = std::get_if<AdamsShift>(&spec)) return apply_adams_shift(*a, r);
  return apply_gcd_fold(std::get<GcdFold>(spec), r);
}

VerifyReport verify_endomorphism(const std::function<MElem(const MElem&)>& apply,
                                 const std::function<std::size_t(std::size_t)>& star,
                                 const std::vector<MElem>& samples, std::size_t n_max) {
  VerifyReport report;

  LawCheck identity{"identity", true, std::nullopt};
  if (apply(MElem::one()) != MElem::one()) {
    identity.pass = false;
    identity.witness = MElem::one();
  }
  report.checks.push_back(std::move(identity));

  LawCheck additivity{"additivity", true, std::nullopt};
  LawCheck multiplicativity{"multiplicativity", true, std::nullopt};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const MElem& a = samples[i];
    const MElem& b = samples[(i + 1) % samples.size()];
    if (additivity.pass && apply(a + b) != apply(a) + apply(b)) {
      additivity.pass = false;
      additivity.witness = a;
    }
    if (multiplicativity.pass && apply(a * b) != apply(a) * apply(b)) {
      multiplicativity.pass = false;
      multiplicativity.witness = a;
    }
    if (!additivity.pass && !multiplicativity.pass) break;
  }
  report.checks.push_back(std::move(additivity));
  report.checks.push_back(std::move(multiplicativity));

  LawCheck factorization{"ghost_factorization", true, std::nullopt};
  std::size_t star_max = 0;
  for (std::size_t n = 0; n <= n_max; ++n) star_max = std::max(star_max, star(n));
  for (const MElem& r : samples) {
    const MElem image = apply(r);
    const GhostVector t_image = ghost(image, n_max);
    const GhostVector t_r = ghost(r, star_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (t_image[n] != t_r[star(n)]) {
        factorization.pass = false;
        factorization.witness = r;
        break;
      }
    }
    if (!factorization.pass) break;
  }
  report.checks.push_back(std::move(factorization));
  return report;
}

VerifyReport endo_verify(const EndoSpec& spec, const std::vector<MElem>& samples,
                         std::size_t n_max) {
  return verify_endomorphism([&spec](const MElem& r) { return endo_apply(spec, r); },
                             [&spec](std::size_t n) { return endo_star(spec, n); },
                             samples, n_max);
}

XImage classify_image_of_x(const MElem& m) {
  if (m == MElem::x()) return XImage::X;
  if (m.is_zero()) return XImage::Zero;
  if (m == MElem::one()) return XImage::XMinus1;
  if (m == MElem::basis(1)) return XImage::XMinus1OverX;
  return XImage::Invalid;
}

PrimePowerForm prime_power_form_check(const CompletionElem& ce, std::size_t p,
                                      std::size_t alpha) {
  if (!is_prime(p)) throw Error(errc::invalid_argument, "p must be prime");
  if (alpha == 0) throw Error(errc::invalid_argument, "alpha must be >= 1");

  PrimePowerForm out;
  out.s.assign(alpha + 1, 0);

  std::vector<Integer> p_pow(alpha + 1);
  p_pow[0] = 1;
  for (std::size_t i = 1; i <= alpha; ++i) p_pow[i] = p_pow[i - 1] * static_cast<unsigned long>(p);

  for (const auto& [n, cn] : ce.c) {
    std::size_t beta = 0, m = n;
    while (m % p == 0) m /= p, ++beta;
    if (m != 1 || beta > alpha) {
      out.violation = "support contains index " + std::to_string(n) +
                      ", not a power of p up to p^alpha";
      return out;
    }
    Integer q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), cn.get_mpz_t(),
                p_pow[alpha - beta].get_mpz_t());
    if (rem != 0) {
      out.violation = "c at index " + std::to_string(n) + " is not divisible by p^" +
                      std::to_string(alpha - beta);
      return out;
    }
    if (q < -1 || q > 1) {
      out.violation = "s_" + std::to_string(beta) + " = " + q.get_str() +
                      " is outside {-1, 0, 1}";
      return out;
    }
    out.s[beta] = static_cast<int>(q.get_si());
  }

  Integer s_sum = 0;
  for (int sb : out.s) s_sum += sb;
  out.s_minus_inf = ce.c0 - p_pow[alpha] * s_sum;
  out.ok = true;
  return out;
}

StarTable star_table(const EndoSpec& spec, std::size_t n_max) {
  StarTable t;
  t.entries.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) t.entries.push_back(endo_star(spec, n));
  return t;
}

StarReport star_checks(const StarTable& table) {
  StarReport report;
  const auto& e = table.entries;
  const std::size_t n_max = e.empty() ? 0 : e.size() - 1;

  // (a) one zero among indices >= 1 forces all of them to zero.
  std::size_t zeros = 0;
  for (std::size_t k = 1; k <= n_max; ++k) zeros += e[k] == 0;
  StarVerdict degenerate{"degenerate_consistency", zeros == 0 || zeros == n_max, ""};
  if (!degenerate.pass)
    degenerate.detail = "zero and nonzero values mixed among indices >= 1";
  report.verdicts.push_back(std::move(degenerate));

  const bool is_degenerate = n_max >= 1 && e[1] == 0;

  // (b) multiplicativity of phi^*(n)/phi^*(1), prime powers to prime powers.
  StarVerdict mult{"ratio_multiplicative", true, ""};
  if (is_degenerate) {
    mult.detail = "skipped: phi^*(1) = 0";
  } else if (n_max >= 1) {
    for (std::size_t a = 2; a <= n_max && mult.pass; ++a) {
      for (std::size_t b = a + 1; a * b <= n_max && mult.pass; ++b) {
        if (std::gcd(a, b) != 1) continue;
        if (e[a * b] * e[1] != e[a] * e[b]) {
          mult.pass = false;
          mult.detail = "ratio not multiplicative at coprime pair (" + std::to_string(a) +
                        ", " + std::to_string(b) + ")";
        }
      }
    }
    for (std::size_t p = 2; p <= n_max && mult.pass; ++p) {
      if (!is_prime(p)) continue;
      for (std::size_t pa = p; pa <= n_max; pa *= p) {
        if (e[pa] == 0 || e[pa] % e[1] != 0) {
          mult.pass = false;
          mult.detail = "phi^*(" + std::to_string(pa) + ") is not a nonzero multiple of phi^*(1)";
          break;
        }
        std::size_t ratio = e[pa] / e[1];
        while (ratio > 1 && ratio % p == 0) ratio /= p;
        if (ratio != 1) {
          mult.pass = false;
          mult.detail = "ratio at " + std::to_string(pa) + " is not a power of " +
                        std::to_string(p);
          break;
        }
        if (pa > n_max / p) break;
      }
    }
  }
  report.verdicts.push_back(std::move(mult));

  // (c) v_p(phi^*(k)) constant on classes of constant v_p(k).
  StarVerdict vp{"vp_dependence", true, ""};
  if (is_degenerate) {
    vp.detail = "skipped: phi^* vanishes";
  } else {
    for (std::size_t p = 2; p <= n_max && vp.pass; ++p) {
      if (!is_prime(p)) continue;
      std::map<std::size_t, std::size_t> class_value;  // v_p(k) -> v_p(phi^*(k))
      for (std::size_t k = 1; k <= n_max; ++k) {
        if (e[k] == 0) continue;
        const std::size_t vk = padic_valuation(k, p);
        const std::size_t vek = padic_valuation(e[k], p);
        auto [it, inserted] = class_value.emplace(vk, vek);
        if (!inserted && it->second != vek) {
          vp.pass = false;
          vp.detail = "v_" + std::to_string(p) + " varies within the class v_p(k) = " +
                      std::to_string(vk);
          break;
        }
      }
    }
  }
  report.verdicts.push_back(std::move(vp));
  return report;
}

}  // namespace mring
