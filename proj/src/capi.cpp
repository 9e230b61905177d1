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

#include "mring/mring.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "analysis.hpp"
#include "parser.hpp"
#include "serialize.hpp"

struct mring_elem {
  mring::MElem v;
};

struct mring_completion {
  mring::CompletionElem v;
};

namespace {

thread_local std::string g_last_error;

mring_status status_of(const mring::Error& e) {
  return e.code() == mring::errc::parse_error ? MRING_ERR_PARSE : MRING_ERR_DOMAIN;
}

mring_status set_error(mring_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
mring_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const mring::Error& e) {
    return set_error(status_of(e), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MRING_ERR_INVALID, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MRING_ERR_DOMAIN, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mring_status require(bool ok, const char* message) {
  return ok ? MRING_OK : set_error(MRING_ERR_INVALID, message);
}

}  // namespace

extern "C" {

const char* mring_version(void) { return "1.0.0"; }

const char* mring_last_error(void) { return g_last_error.c_str(); }

void mring_string_free(char* s) { std::free(s); }
void mring_elem_free(mring_elem* e) { delete e; }
void mring_completion_free(mring_completion* c) { delete c; }

mring_status mring_elem_parse(const char* text, mring_elem** out) {
  if (require(text && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    mring::MElem v = mring::eval(*mring::parse(text));
    *out = new mring_elem{std::move(v)};
    return MRING_OK;
  });
}

mring_status mring_elem_from_json(const char* json_text, mring_elem** out) {
  if (require(json_text && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    const auto j = mring::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) return set_error(MRING_ERR_PARSE, "invalid JSON");
    *out = new mring_elem{mring::elem_from_json(j)};
    return MRING_OK;
  });
}

char* mring_elem_to_json(const mring_elem* e) {
  if (!e) return nullptr;
  return dup_string(mring::elem_to_json(e->v).dump());
}

char* mring_elem_format(const mring_elem* e) {
  if (!e) return nullptr;
  return dup_string(mring::format(e->v));
}

int mring_elem_eq(const mring_elem* a, const mring_elem* b) {
  if (!a || !b) return -1;
  return a->v == b->v ? 1 : 0;
}

mring_status mring_elem_add(const mring_elem* a, const mring_elem* b, mring_elem** out) {
  if (require(a && b && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    *out = new mring_elem{a->v + b->v};
    return MRING_OK;
  });
}

mring_status mring_elem_neg(const mring_elem* a, mring_elem** out) {
  if (require(a && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    *out = new mring_elem{-a->v};
    return MRING_OK;
  });
}

mring_status mring_elem_mul(const mring_elem* a, const mring_elem* b, mring_elem** out) {
  if (require(a && b && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    *out = new mring_elem{a->v * b->v};
    return MRING_OK;
  });
}

mring_status mring_elem_scalar(long long n, const mring_elem* a, mring_elem** out) {
  if (require(a && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    *out = new mring_elem{mring::scalar_mul(mring::Integer(static_cast<long>(n)), a->v)};
    return MRING_OK;
  });
}

mring_status mring_elem_adams(const mring_elem* a, unsigned long n, mring_elem** out) {
  if (require(a && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    *out = new mring_elem{mring::adams(a->v, n)};
    return MRING_OK;
  });
}

mring_status mring_ghost_json(const mring_elem* e, unsigned long level, char** out) {
  if (require(e && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    *out = dup_string(mring::ghost_to_json(mring::ghost(e->v, level)).dump());
    return MRING_OK;
  });
}

mring_status mring_necklace_json(const mring_elem* e, unsigned long level, char** out) {
  if (require(e && out && level >= 1, "need a handle and level >= 1") != MRING_OK)
    return MRING_ERR_INVALID;
  return guarded([&]() {
    *out = dup_string(mring::necklace_to_json(mring::necklace_coeffs(e->v, level)).dump());
    return MRING_OK;
  });
}

mring_status mring_phi_member(const mring_elem* e, int* member) {
  if (require(e && member, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    *member = mring::is_phi_member(e->v) ? 1 : 0;
    return MRING_OK;
  });
}

mring_status mring_decompose(const mring_elem* e, mring_completion** out) {
  if (require(e && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    *out = new mring_completion{mring::phi_decompose(e->v)};
    return MRING_OK;
  });
}

char* mring_completion_to_json(const mring_completion* c) {
  if (!c) return nullptr;
  return dup_string(mring::completion_to_json(c->v).dump());
}

mring_status mring_cyclo_identity(const mring_elem* e, unsigned long order, int* holds) {
  if (require(e && holds, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    if (!e->v.den().is_one())
      throw mring::Error(mring::errc::invalid_argument,
                         "identity check takes a polynomial element [f]");
    *holds = mring::cyclotomic_identity_check(e->v.num(), order) ? 1 : 0;
    return MRING_OK;
  });
}

mring_status mring_endo_apply(const char* endo_json, const mring_elem* e, mring_elem** out) {
  if (require(endo_json && e && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    const auto j = mring::json::parse(endo_json, nullptr, false);
    if (j.is_discarded()) return set_error(MRING_ERR_PARSE, "invalid endomorphism JSON");
    *out = new mring_elem{mring::endo_apply(mring::endo_from_json(j), e->v)};
    return MRING_OK;
  });
}

mring_status mring_endo_verify(const char* endo_json, const mring_elem* const* samples,
                               size_t count, unsigned long level, char** report_json) {
  if (require(endo_json && report_json && (count == 0 || samples), "null argument") !=
      MRING_OK)
    return MRING_ERR_INVALID;
  return guarded([&]() {
    const auto j = mring::json::parse(endo_json, nullptr, false);
    if (j.is_discarded()) return set_error(MRING_ERR_PARSE, "invalid endomorphism JSON");
    std::vector<mring::MElem> in;
    in.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!samples[i]) return set_error(MRING_ERR_INVALID, "null sample handle");
      in.push_back(samples[i]->v);
    }
    const auto report = mring::endo_verify(mring::endo_from_json(j), in, level);
    *report_json = dup_string(mring::verify_report_to_json(report).dump());
    return MRING_OK;
  });
}

mring_status mring_dirichlet_shift(const double* angles, size_t count,
                                   unsigned long q_max, unsigned long* out_q) {
  if (require(angles && out_q && count > 0, "need angles and an output slot") != MRING_OK)
    return MRING_ERR_INVALID;
  return guarded([&]() {
    std::vector<mring::Real> xs;
    xs.reserve(count);
    for (size_t i = 0; i < count; ++i) xs.emplace_back(angles[i]);
    *out_q = mring::dirichlet_shift(xs, q_max);
    return MRING_OK;
  });
}

mring_status mring_demo_json(const mring_elem* e, unsigned long k_max, char** out) {
  if (require(e && out, "null argument") != MRING_OK) return MRING_ERR_INVALID;
  return guarded([&]() {
    const auto report = mring::finite_values_unit_roots_demo(e->v, k_max);
    *out = dup_string(mring::demo_report_to_json(report).dump());
    return MRING_OK;
  });
}

}  // extern "C"
