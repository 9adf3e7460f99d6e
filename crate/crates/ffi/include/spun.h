#ifndef SPUN_H
#define SPUN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpunStatus {
  SPUN_STATUS_OK = 0,
  SPUN_STATUS_NULL_POINTER = 1,
  SPUN_STATUS_INVALID_ARGUMENT = 2,
  SPUN_STATUS_PARSE_ERROR = 3,
  SPUN_STATUS_DIMENSION_MISMATCH = 4,
  SPUN_STATUS_NOT_IN_SUBSPACE = 5,
  SPUN_STATUS_REDUCTION_FAILED = 6,
  SPUN_STATUS_PANIC = 7,
} SpunStatus;

/**
 * Opaque multivector handle.
 */
typedef struct SpunMultivector SpunMultivector;

/**
 * Opaque point configuration handle.
 */
typedef struct SpunPointConfig SpunPointConfig;

/**
 * Opaque reduction report handle.
 */
typedef struct SpunReport SpunReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *spun_last_error_message(void);

/**
 * Frees a string returned by this library. Null is ignored.
 */
void spun_string_free(char *s);

/**
 * Parses text such as `"1 + 3/2 e1e2 - e1e4e5"` over `X_dim`.
 */
enum SpunStatus spun_multivector_parse(uint32_t dim,
                                       const char *text,
                                       struct SpunMultivector **out);

void spun_multivector_free(struct SpunMultivector *mv);

enum SpunStatus spun_multivector_dim(const struct SpunMultivector *mv, uint32_t *out);

enum SpunStatus spun_multivector_to_string(const struct SpunMultivector *mv, char **out);

enum SpunStatus spun_multivector_add(const struct SpunMultivector *a,
                                     const struct SpunMultivector *b,
                                     struct SpunMultivector **out);

enum SpunStatus spun_multivector_mul(const struct SpunMultivector *a,
                                     const struct SpunMultivector *b,
                                     struct SpunMultivector **out);

enum SpunStatus spun_multivector_conjugate(const struct SpunMultivector *a,
                                           struct SpunMultivector **out);

/**
 * `N(x) = x conj(x)`.
 */
enum SpunStatus spun_multivector_norm(const struct SpunMultivector *a,
                                      struct SpunMultivector **out);

enum SpunStatus spun_multivector_equal(const struct SpunMultivector *a,
                                       const struct SpunMultivector *b,
                                       bool *out);

/**
 * Chart coordinates of `x / x_1` as comma-separated rationals.
 */
enum SpunStatus spun_eta_project(const struct SpunMultivector *mv, char **out);

/**
 * The element of `J_dim` with first coordinate one and chart point `y`
 * (comma-separated rationals, `C(dim+1, 2)` entries).
 */
enum SpunStatus spun_eta_inverse_lift(uint32_t dim, const char *y, struct SpunMultivector **out);

/**
 * JSON of the `d` explicit equations of `L_ap`; `consistent` reports
 * whether they cut out the independently constructed flat.
 */
enum SpunStatus spun_l_ap_equations_json(uint32_t dim,
                                         const char *a,
                                         const char *p,
                                         char **out,
                                         bool *consistent);

/**
 * Parses `{"dimension": d, "points": [["0","1"], ...]}`.
 */
enum SpunStatus spun_point_config_from_json(const char *json, struct SpunPointConfig **out);

/**
 * The grid `{0..side-1}^dim`.
 */
enum SpunStatus spun_point_config_lattice(uint32_t dim,
                                          uint32_t side,
                                          struct SpunPointConfig **out);

enum SpunStatus spun_point_config_len(const struct SpunPointConfig *cfg, size_t *out);

void spun_point_config_free(struct SpunPointConfig *cfg);

/**
 * Runs the full reduction. `threads == 0` uses the default pool size.
 */
enum SpunStatus spun_run_reduction(const struct SpunPointConfig *cfg,
                                   uint64_t seed,
                                   uint32_t threads,
                                   struct SpunReport **out);

enum SpunStatus spun_report_to_json(const struct SpunReport *report, char **out);

enum SpunStatus spun_report_all_pass(const struct SpunReport *report, bool *out);

/**
 * Ordered count of intersecting flat pairs after slicing.
 */
enum SpunStatus spun_report_pair_count(const struct SpunReport *report, uint64_t *out);

void spun_report_free(struct SpunReport *report);

/**
 * Runs the property suites for `dim` in `2..=6`; `passed` is true when
 * every check holds.
 */
enum SpunStatus spun_verify(uint32_t dim, uint32_t trials, uint64_t seed, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPUN_H */
