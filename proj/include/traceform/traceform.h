/* traceform: exact invariants of representations of split almost-simple
 * algebraic groups — orbit and representation indices, gcd invariants over
 * a character lattice, normalization constants, and the classification of
 * characteristics in which every trace form is zero or degenerate.
 *
 * Conventions:
 *   - All functions returning tf_status report failure details through
 *     tf_last_error(), whose buffer is thread-local and valid until the
 *     next failing call on the same thread.
 *   - Arbitrary-precision values cross the boundary as decimal strings.
 *     Every char** output is allocated by the library and must be released
 *     with tf_string_free().
 *   - Weights are arrays of int64_t coordinates in the fundamental-weight
 *     basis, of length equal to the rank.
 *
 * SPDX-License-Identifier: MIT
 */

#ifndef TRACEFORM_H
#define TRACEFORM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef TF_API
#if defined(_WIN32)
#define TF_API __declspec(dllimport)
#else
#define TF_API __attribute__((visibility("default")))
#endif
#endif

typedef enum tf_status {
  TF_OK = 0,
  TF_ERR_INVALID_ARGUMENT = 1, /* malformed input */
  TF_ERR_CAP_EXCEEDED = 2,     /* enumeration exceeded its configured cap */
  TF_ERR_NOT_STABILIZED = 3,   /* gcd scan inconclusive at the given bound */
  TF_ERR_OVERFLOW = 4,         /* value does not fit the requested type */
  TF_ERR_OUT_OF_SCOPE = 5,     /* case explicitly not covered */
  TF_ERR_INTERNAL = 6          /* broken invariant; indicates a bug */
} tf_status;

/* Opaque handles. */
typedef struct tf_root_system tf_root_system;
typedef struct tf_group tf_group;

/* Library version string (static storage; do not free). */
TF_API const char* tf_version(void);

/* Message for the most recent failure on this thread (static storage per
 * thread; do not free). Empty string if no failure has occurred. */
TF_API const char* tf_last_error(void);

/* Releases a string allocated by the library. NULL is allowed. */
TF_API void tf_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Root systems                                                        */
/* ------------------------------------------------------------------ */

/* type is one of 'A'..'G'; rank bounds are the classical ones
 * (A >= 1, B >= 2, C >= 2, D >= 3, E in 6..8, F = 4, G = 2). */
TF_API tf_status tf_root_system_create(char type, int rank,
                                       tf_root_system** out);
TF_API void tf_root_system_free(tf_root_system* rs);

TF_API int tf_root_system_rank(const tf_root_system* rs);

/* JSON object: type, rank, roots, long_roots, short_roots, coxeter,
 * dual_coxeter, weyl_order (decimal string), fundamental_group
 * (invariant factors). */
TF_API tf_status tf_root_system_info_json(const tf_root_system* rs,
                                          char** out_json);

/* Size of the Weyl orbit of the dominant weight. */
TF_API tf_status tf_orbit_size(const tf_root_system* rs,
                               const int64_t* weight, size_t len,
                               char** out_decimal);

/* Orbit index: the gcd contribution of one Weyl orbit. */
TF_API tf_status tf_orbit_index(const tf_root_system* rs,
                                const int64_t* weight, size_t len,
                                char** out_decimal);

/* Dimension and index of the irreducible representation with the given
 * highest weight. dimension_cap <= 0 selects the default cap. */
TF_API tf_status tf_irrep_dimension(const tf_root_system* rs,
                                    const int64_t* weight, size_t len,
                                    char** out_decimal);
TF_API tf_status tf_irrep_index(const tf_root_system* rs,
                                const int64_t* weight, size_t len,
                                int64_t dimension_cap, char** out_decimal);

/* Index of a tensor product from the dimensions and indices of the two
 * factors (decimal strings). */
TF_API tf_status tf_tensor_index(const char* dim1, const char* index1,
                                 const char* dim2, const char* index2,
                                 char** out_decimal);

/* ------------------------------------------------------------------ */
/* Groups (isogeny forms)                                              */
/* ------------------------------------------------------------------ */

/* Labels: SL9, SL9/mu3, PGL4, Sp10, PSp10, Spin11, SO8, PSO8, HSpin12,
 * E6sc, E6ad, E7sc, E7ad, E8, F4, G2, and generic <Type><rank>sc/ad. */
TF_API tf_status tf_group_parse(const char* label, tf_group** out);
TF_API void tf_group_free(tf_group* g);

TF_API tf_status tf_group_label(const tf_group* g, char** out);

/* JSON object: label, type, rank, simply_connected, adjoint,
 * subgroup_order (order of the subgroup of P/Q picked out by the form)
 * and index_in_p (the index of the character lattice in the full weight
 * lattice P) as decimal strings. */
TF_API tf_status tf_group_info_json(const tf_group* g, char** out_json);

/* Normalization constants of the induced form on the cocharacter side:
 * e for the bilinear form, eq for the quadratic form. */
TF_API tf_status tf_group_e(const tf_group* g, char** out_decimal);
TF_API tf_status tf_group_eq(const tf_group* g, char** out_decimal);

/* The gcd of representation indices over the character lattice, scanned
 * over the box [0, bound]^rank. *out_stabilized is 1 when the interior
 * gcd agrees with the full gcd (the committed value), else 0.
 * bound <= 0 selects the default bound. */
TF_API tf_status tf_group_index(const tf_group* g, int bound,
                                char** out_decimal, int* out_stabilized);

/* Full classification as JSON: label, group_index, e, eq, ratio
 * (decimal strings), degenerate_primes, zero_primes (arrays of decimal
 * strings). Fails with TF_ERR_NOT_STABILIZED when the scan is
 * inconclusive at the bound. */
TF_API tf_status tf_group_classify_json(const tf_group* g, int bound,
                                        char** out_json);

/* Every representation has zero trace form in characteristic p?
 * p is "0" or a prime, as a decimal string. *out is 0 or 1. */
TF_API tf_status tf_trace_zero_all(const tf_group* g, const char* p,
                                   int bound, int* out);

/* Single-representation criterion from the representation index and the
 * group normalization constant (decimal strings). */
TF_API tf_status tf_trace_zero_single(const char* n_rho, const char* e_g,
                                      const char* p, int* out);

/* Some representation has nondegenerate trace form in characteristic p? */
TF_API tf_status tf_nondegenerate_exists(const tf_group* g, const char* p,
                                         int* out);

/* ------------------------------------------------------------------ */
/* Reports                                                             */
/* ------------------------------------------------------------------ */

/* Classification table for the standard families, as a JSON array of row
 * objects {family, params, label, group_index, e, eq, ratio,
 * ratio_primes, degenerate_primes, zero_primes, stabilized}.
 * max_n bounds the matrix-size parameter of the classical families
 * (SL_n with all m | n, Sp_n/PSp_n for even n, Spin_n/SO_n/PSO_n for
 * n >= 7, HSpin_n for n = 0 mod 4, n >= 12); exceptional types appear
 * when their rank is <= max_n. One shared scan serves all isogenies of a
 * root system, so rows are cheap. max_n <= 0 selects 12; bound <= 0
 * selects the default scan bound. Output is deterministic. */
TF_API tf_status tf_table1_json(int max_n, int bound, char** out_json);

/* Built-in self-verification. suite is "all", "trace" (matrix-model
 * trace Grams against the normalized form and the single-representation
 * criterion) or "appendix" (restricted enveloping-algebra trace
 * identities). JSON object: {suite, passed, checks: [{name, passed}...]}.
 * The status is TF_OK even when checks fail; inspect "passed". */
TF_API tf_status tf_verify_json(const char* suite, char** out_json);

/* ------------------------------------------------------------------ */
/* Twisted forms (published-table lookup)                              */
/* ------------------------------------------------------------------ */

/* twisted_label looks like "2A4", "3D4", "6D4", "2E6", "1B3".
 * JSON object: label, type, rank, twist, p, simply_connected,
 * degenerate_always (bool), zero_always (bool or null when the published
 * classification leaves the case open), computed (always false: these
 * verdicts are published-table data, not first-principles computation). */
TF_API tf_status tf_twisted_classify_json(const char* twisted_label,
                                          const char* p,
                                          int simply_connected,
                                          char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TRACEFORM_H */
