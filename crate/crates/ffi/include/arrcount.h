#ifndef ARRCOUNT_H
#define ARRCOUNT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ArrcFamily {
  ARRC_FAMILY_GENERIC3 = 0,
  ARRC_FAMILY_GENERIC4 = 1,
  ARRC_FAMILY_BRAID = 2,
  /**
   * Needs the line count `k`.
   */
  ARRC_FAMILY_PENCIL = 3,
} ArrcFamily;

typedef enum ArrcStatus {
  ARRC_STATUS_OK = 0,
  ARRC_STATUS_NULL_POINTER = 1,
  ARRC_STATUS_INVALID_ARGUMENT = 2,
  ARRC_STATUS_PARSE = 3,
  ARRC_STATUS_RANGE = 4,
  ARRC_STATUS_INTERNAL = 5,
} ArrcStatus;

/**
 * Hyperplane arrangement with its intersection lattice.
 */
typedef struct ArrcArrangement ArrcArrangement;

/**
 * Characteristic-number table of a family.
 */
typedef struct ArrcCharTable ArrcCharTable;

/**
 * Incidence specification, optionally with a realization.
 */
typedef struct ArrcIncidence ArrcIncidence;

/**
 * Polynomial in a truncated Chow ring, with its ring.
 */
typedef struct ArrcPolynomial ArrcPolynomial;

/**
 * A plane curve by degree and class; a point condition is `{0, 1}`, a line `{1, 0}`.
 */
typedef struct ArrcCurve {
  uint64_t degree;
  uint64_t curve_class;
} ArrcCurve;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or `""`. Valid until the
 * next call into this library on the same thread; do not free.
 */
const char *arrc_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void arrc_string_free(char *s);

/**
 * Degree of the moduli space of generic arrangements of `k` hyperplanes in `P^n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ArrcStatus arrc_count_generic(uint64_t k, uint64_t n, char **out);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum ArrcStatus arrc_count_zero_coned(uint64_t k, uint64_t n, char **out);

/**
 * d-coned count; with `naive` set, the single-configuration undercount.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ArrcStatus arrc_count_dconed(uint64_t d, uint64_t k, uint64_t n, bool naive, char **out);

/**
 * Degree of `prod sigma_{1^i}^{s[i]}` on `G(d, n)`; `s` has `d + 2` entries.
 *
 * # Safety
 * `s` must point to `len` readable values; `out` must be valid.
 */
enum ArrcStatus arrc_schubert_degree(size_t d, size_t n, const size_t *s, size_t len, char **out);

/**
 * Builds the characteristic-number table of `family` (`k` is read for pencils only).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ArrcStatus arrc_char_table_new(enum ArrcFamily family, size_t k, struct ArrcCharTable **out);

/**
 * Dimension `D` of the family; entries exist for `p = 0..=D`.
 *
 * # Safety
 * `table` and `out` must be valid pointers.
 */
enum ArrcStatus arrc_char_table_dim(const struct ArrcCharTable *table, size_t *out);

/**
 * `N(p, D - p)`.
 *
 * # Safety
 * `table` and `out` must be valid pointers.
 */
enum ArrcStatus arrc_char_table_entry(const struct ArrcCharTable *table, size_t p, char **out);

/**
 * Count through `p` points and tangent to the `len` given curves
 * (`p + len` must equal the table dimension).
 *
 * # Safety
 * `table` and `out` must be valid; `curves` must point to `len` values.
 */
enum ArrcStatus arrc_zeuthen(const struct ArrcCharTable *table,
                             size_t p,
                             const struct ArrcCurve *curves,
                             size_t len,
                             char **out);

/**
 * # Safety
 * `table` must be null or a handle from [`arrc_char_table_new`], not yet freed.
 */
void arrc_char_table_free(struct ArrcCharTable *table);

/**
 * Class of the `k`-line incidence variety (`k` = 3 or 4).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ArrcStatus arrc_incidence_class_new(size_t k, struct ArrcPolynomial **out);

/**
 * Coefficient of a monomial written like `x1^2*y12`.
 *
 * # Safety
 * `poly` and `out` must be valid; `monomial` must be a NUL-terminated string.
 */
enum ArrcStatus arrc_polynomial_coefficient(const struct ArrcPolynomial *poly,
                                            const char *monomial,
                                            char **out);

/**
 * Coefficient of the top monomial.
 *
 * # Safety
 * `poly` and `out` must be valid pointers.
 */
enum ArrcStatus arrc_polynomial_chow_degree(const struct ArrcPolynomial *poly, char **out);

/**
 * # Safety
 * `poly` and `out` must be valid pointers.
 */
enum ArrcStatus arrc_polynomial_to_string(const struct ArrcPolynomial *poly, char **out);

/**
 * # Safety
 * `poly` must be null or a handle from this library, not yet freed.
 */
void arrc_polynomial_free(struct ArrcPolynomial *poly);

/**
 * Parses an arrangement file and builds its intersection lattice.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid.
 */
enum ArrcStatus arrc_arrangement_parse(const char *text, struct ArrcArrangement **out);

/**
 * # Safety
 * `a` and `out` must be valid pointers.
 */
enum ArrcStatus arrc_arrangement_is_generic(const struct ArrcArrangement *a, bool *out);

/**
 * Multivariate Tutte evaluation; `q` and each of the `len` entries of `xs`
 * are rationals written `p` or `p/q`.
 *
 * # Safety
 * `a` and `out` must be valid; `q` and the `len` entries of `xs` must be
 * NUL-terminated strings.
 */
enum ArrcStatus arrc_arrangement_tutte(const struct ArrcArrangement *a,
                                       const char *q,
                                       const char *const *xs,
                                       size_t len,
                                       char **out);

/**
 * # Safety
 * `a` must be null or a handle from this library, not yet freed.
 */
void arrc_arrangement_free(struct ArrcArrangement *a);

/**
 * Parses an incidence spec and, when `realization` is not null, a realization.
 *
 * # Safety
 * `spec` (and `realization` if not null) must be NUL-terminated strings; `out` must be valid.
 */
enum ArrcStatus arrc_incidence_parse(const char *spec,
                                     const char *realization,
                                     struct ArrcIncidence **out);

/**
 * The built-in Pappus configuration with its realization.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ArrcStatus arrc_incidence_pappus(struct ArrcIncidence **out);

/**
 * # Safety
 * `inc` and `out` must be valid pointers.
 */
enum ArrcStatus arrc_incidence_virtual_dimension(const struct ArrcIncidence *inc, int64_t *out);

/**
 * Rank of the incidence Jacobian; fails with `InvalidArgument` without a realization.
 *
 * # Safety
 * `inc` and `out` must be valid pointers.
 */
enum ArrcStatus arrc_incidence_jacobian_rank(const struct ArrcIncidence *inc, size_t *out);

/**
 * The spec in its text format.
 *
 * # Safety
 * `inc` and `out` must be valid pointers.
 */
enum ArrcStatus arrc_incidence_spec_to_string(const struct ArrcIncidence *inc, char **out);

/**
 * # Safety
 * `inc` must be null or a handle from this library, not yet freed.
 */
void arrc_incidence_free(struct ArrcIncidence *inc);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARRCOUNT_H */
