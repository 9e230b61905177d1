/* Copyright 2026 The mring Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the mring library: exact arithmetic in the ring of
 * monic-polynomial ratios, its ghost (power-sum) coordinates, cyclotomic
 * decomposition, and the continuous endomorphism families.
 *
 * Conventions:
 *   - Handles are opaque; release them with the matching *_free function.
 *   - Fallible calls return mring_status and write results through out
 *     parameters, which are left untouched on failure.
 *   - mring_last_error() describes the most recent failure on the calling
 *     thread.
 *   - Strings returned through char* or out parameters are heap-allocated;
 *     release them with mring_string_free.
 *   - Elements are parsed from the expression language, e.g. "[x-2]",
 *     "[x^2+1/x]", "cyc(6)", "xn1(4)", "b(3)", "2*[x-3] + b(2)*b(2)".
 *   - JSON encodings: element {"num":[...],"den":[...]} with ascending
 *     rational-string coefficients; completion {"c0":int,"c":{"n":int},
 *     "level":int|null}; endomorphism {"variant":"adams_shift","k":int,
 *     "s":int} or {"variant":"gcd_fold","N":int}.
 */

#ifndef MRING_MRING_H
#define MRING_MRING_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mring_elem mring_elem;             /* element of the ring */
typedef struct mring_completion mring_completion; /* completion element  */

typedef enum mring_status {
  MRING_OK = 0,
  MRING_ERR_PARSE = 1,  /* malformed expression or JSON */
  MRING_ERR_DOMAIN = 2, /* input outside an operation's domain */
  MRING_ERR_INVALID = 3 /* null handle or out-of-range argument */
} mring_status;

const char* mring_version(void);

/* Message for the last failure on this thread; never NULL. */
const char* mring_last_error(void);

void mring_string_free(char* s);
void mring_elem_free(mring_elem* e);
void mring_completion_free(mring_completion* c);

/* ---- construction and serialization ---- */

mring_status mring_elem_parse(const char* text, mring_elem** out);
mring_status mring_elem_from_json(const char* json_text, mring_elem** out);
char* mring_elem_to_json(const mring_elem* e);
char* mring_elem_format(const mring_elem* e); /* e.g. "[x^2-5x+6/x^2]" */

/* ---- ring operations ---- */

int mring_elem_eq(const mring_elem* a, const mring_elem* b); /* 1, 0, or -1 on NULL */
mring_status mring_elem_add(const mring_elem* a, const mring_elem* b, mring_elem** out);
mring_status mring_elem_neg(const mring_elem* a, mring_elem** out);
mring_status mring_elem_mul(const mring_elem* a, const mring_elem* b, mring_elem** out);
mring_status mring_elem_scalar(long long n, const mring_elem* a, mring_elem** out);
mring_status mring_elem_adams(const mring_elem* a, unsigned long n, mring_elem** out);

/* ---- ghost and cyclotomic structure ---- */

/* JSON array ["t0","t1",...] of t_0..t_level. */
mring_status mring_ghost_json(const mring_elem* e, unsigned long level, char** out);

/* JSON array ["c1","c2",...] of the necklace coefficients c_1..c_level. */
mring_status mring_necklace_json(const mring_elem* e, unsigned long level, char** out);

/* Writes 1 when every root of numerator and denominator is 0 or on the unit
 * circle (equivalently: both are products of x-powers and cyclotomics). */
mring_status mring_phi_member(const mring_elem* e, int* member);

mring_status mring_decompose(const mring_elem* e, mring_completion** out);
char* mring_completion_to_json(const mring_completion* c);

/* Checks the reversed-coefficient product identity for e = [f] (the element
 * must have denominator 1) up to the given series order. */
mring_status mring_cyclo_identity(const mring_elem* e, unsigned long order, int* holds);

/* ---- endomorphisms ---- */

mring_status mring_endo_apply(const char* endo_json, const mring_elem* e, mring_elem** out);

/* Runs the endomorphism law checks over the samples; *report_json receives a
 * JSON array [{"law":...,"pass":...,"witness":...}, ...]. */
mring_status mring_endo_verify(const char* endo_json, const mring_elem* const* samples,
                               size_t count, unsigned long level, char** report_json);

/* ---- analysis ---- */

/* Smallest q <= q_max with every q*angle within q_max^(-1/(J+1)) of an
 * integer; MRING_ERR_DOMAIN when no q qualifies (q_max too small). */
mring_status mring_dirichlet_shift(const double* angles, size_t count,
                                   unsigned long q_max, unsigned long* out_q);

/* Ghost value-set demo; *out receives {"values":n,"member":b,"consistent":b}. */
mring_status mring_demo_json(const mring_elem* e, unsigned long k_max, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MRING_MRING_H */
