// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

/* C interface to the nsg numerical semigroup library.
 *
 * Every handle is opaque. Functions returning nsg_status leave their out
 * parameters untouched on failure; the message of the most recent failure
 * on the calling thread is available from nsg_last_error_message(). */
#ifndef NSG_NSG_H
#define NSG_NSG_H

#include <stddef.h>
#include <stdint.h>

#if defined(NSG_BUILDING_LIBRARY)
#define NSG_API __attribute__((visibility("default")))
#else
#define NSG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nsg_status {
  NSG_OK = 0,
  NSG_ERR_INVALID_INPUT = 1,
  NSG_ERR_TOO_SHORT = 2,
  NSG_ERR_CONTAINS_UNIT = 3,
  NSG_ERR_NOT_COPRIME = 4,
  NSG_ERR_NOT_MINIMAL = 5,
  NSG_ERR_OUT_OF_RANGE = 6,
  NSG_ERR_DIMENSION_UNSUPPORTED = 7,
  NSG_ERR_SYMMETRIC_INPUT = 8,
  NSG_ERR_NON_SYMMETRIC_INPUT = 9,
  NSG_ERR_NOT_A_GAP = 10,
  NSG_ERR_INDEX_OUT_OF_RANGE = 11,
  NSG_ERR_NO_COPRIME_BASE_PAIR = 12,
  NSG_ERR_NOT_PRIMITIVE = 13,
  NSG_ERR_NU_TOO_LARGE = 14,
  /* internal invariant violations */
  NSG_ERR_INTERNAL_MISMATCH = 64,
  NSG_ERR_IDENTITY_VIOLATION = 65,
  NSG_ERR_NON_INTEGER_RESULT = 66,
  NSG_ERR_STANDARD_FORM_VIOLATION = 67,
  NSG_ERR_INTERNAL = 68,
  /* API misuse */
  NSG_ERR_NULL_ARGUMENT = 96,
  NSG_ERR_NO_MEMORY = 97
} nsg_status;

typedef enum nsg_diagram_kind {
  NSG_DIAGRAM_DELTA2 = 0,
  NSG_DIAGRAM_DELTA3 = 1,
  NSG_DIAGRAM_LAMBDA = 2
} nsg_diagram_kind;

typedef enum nsg_render_format { NSG_FORMAT_ASCII = 0, NSG_FORMAT_SVG = 1 } nsg_render_format;

/* Name such as "NotCoprime"; "Unknown" for values outside the enum. */
NSG_API const char* nsg_status_name(nsg_status status);
/* Non-zero for statuses that signal a broken internal invariant. */
NSG_API int nsg_status_is_internal(nsg_status status);
NSG_API const char* nsg_last_error_message(void);
/* Offending value of the last failure, if it carried one. */
NSG_API int nsg_last_error_value(int64_t* out);
NSG_API const char* nsg_version(void);

/* Strings and arrays returned through out parameters. */
NSG_API void nsg_string_free(char* s);
NSG_API void nsg_int64_array_free(int64_t* values);

/* ---- validated generator tuples ---- */

typedef struct nsg_generators nsg_generators;

NSG_API nsg_status nsg_generators_create(const int64_t* values, size_t count,
                                         nsg_generators** out);
NSG_API void nsg_generators_destroy(nsg_generators* g);
NSG_API size_t nsg_generators_size(const nsg_generators* g);
/* Sorted ascending. */
NSG_API int64_t nsg_generators_at(const nsg_generators* g, size_t index);

/* n is a non-negative decimal string of any length. */
NSG_API nsg_status nsg_is_representable(const nsg_generators* g, const char* n, int* out);
NSG_API nsg_status nsg_gaps(const nsg_generators* g, int64_t** out, size_t* count);
NSG_API nsg_status nsg_frobenius(const nsg_generators* g, char** out);
NSG_API nsg_status nsg_genus(const nsg_generators* g, char** out);
NSG_API nsg_status nsg_is_symmetric(const nsg_generators* g, int* out);
/* Row-major m*m signed matrix: a_jj on the diagonal, -a_ji elsewhere. */
NSG_API nsg_status nsg_relation_matrix(const nsg_generators* g, int64_t* out, size_t capacity);

/* ---- sparse polynomials ---- */

typedef struct nsg_polynomial nsg_polynomial;

NSG_API nsg_status nsg_hilbert_numerator(const nsg_generators* g, nsg_polynomial** out);
NSG_API void nsg_polynomial_destroy(nsg_polynomial* p);
NSG_API size_t nsg_polynomial_term_count(const nsg_polynomial* p);
/* Terms ascend by degree; the coefficient is a decimal string. */
NSG_API nsg_status nsg_polynomial_term(const nsg_polynomial* p, size_t index, uint64_t* degree,
                                       char** coefficient);
NSG_API nsg_status nsg_polynomial_to_string(const nsg_polynomial* p, char** out);

/* ---- command reports ----
 *
 * Each report carries a JSON envelope
 *   {"schema_version":"1","command":...,"input":{...},"result":{...}}
 * with every integer written as a decimal string, and a plain-text rendering. */

typedef struct nsg_report nsg_report;

NSG_API const char* nsg_report_json(const nsg_report* r);
NSG_API const char* nsg_report_text(const nsg_report* r);
NSG_API void nsg_report_destroy(nsg_report* r);

NSG_API nsg_status nsg_run_gaps(const int64_t* d, size_t count, nsg_report** out);
NSG_API nsg_status nsg_run_frob(const int64_t* d, size_t count, int verify, nsg_report** out);
NSG_API nsg_status nsg_run_relation(const int64_t* d, size_t count, nsg_report** out);
NSG_API nsg_status nsg_run_hilbert(const int64_t* d, size_t count, nsg_report** out);
NSG_API nsg_status nsg_run_genera(const int64_t* d, size_t count, unsigned n_max,
                                  nsg_report** out);
NSG_API nsg_status nsg_run_bounds(const int64_t* d, size_t count, nsg_report** out);
/* DELTA2 takes a coprime pair, the other kinds a triple. */
NSG_API nsg_status nsg_run_diagram(const int64_t* d, size_t count, nsg_diagram_kind kind,
                                   nsg_render_format format, nsg_report** out);
/* threads == 0 selects the machine's parallelism. */
NSG_API nsg_status nsg_run_scan_uniform(int64_t a, int64_t d3_max, unsigned threads,
                                        nsg_report** out);
/* c and nu are rationals written "p/q" or "p". l selects the counterexample
   family member; with l == 0 and d == NULL only the critical l is reported. */
NSG_API nsg_status nsg_run_falsify(const char* c, const char* nu, const int64_t* d,
                                   size_t count, int64_t l, nsg_report** out);
NSG_API nsg_status nsg_run_sparsity(const int64_t* d, size_t count, nsg_report** out);
/* Random minimal m-tuples with entries up to d_max, reproducible from seed. */
NSG_API nsg_status nsg_run_sparsity_scan(unsigned m, int64_t d_max, unsigned samples,
                                         uint64_t seed, unsigned threads, nsg_report** out);
NSG_API nsg_status nsg_run_pythagorean(int64_t k1, int64_t k2, nsg_report** out);
NSG_API nsg_status nsg_run_johnson(int64_t d1, int64_t d2, int64_t d3, nsg_report** out);

#ifdef __cplusplus
}
#endif

#endif /* NSG_NSG_H */
