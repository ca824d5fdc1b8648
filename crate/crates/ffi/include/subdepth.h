#ifndef SUBDEPTH_H
#define SUBDEPTH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_UTF8 = 2,
  SD_STATUS_PARSE = 3,
  SD_STATUS_INVALID_INPUT = 4,
  SD_STATUS_LIMIT_EXCEEDED = 5,
  SD_STATUS_COMPUTATION = 6,
  SD_STATUS_PANIC = 7,
} SdStatus;

/**
 * Nonnegative integer induction matrix.
 */
typedef struct SdMatrix SdMatrix;

/**
 * Scenario runner with its own limits and character table cache.
 */
typedef struct SdPipeline SdPipeline;

/**
 * Result of running one scenario.
 */
typedef struct SdReport SdReport;

/**
 * Depths of an inclusion with their stabilization indices. `q` saturates
 * at `UINT64_MAX`.
 */
typedef struct SdDepths {
  size_t d_odd;
  size_t d_ev;
  size_t d_min;
  size_t d_h;
  size_t n_odd;
  size_t n_ev;
  size_t n_h;
  uint64_t q;
} SdDepths;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or NULL. The pointer
 * stays valid until the next call into the library from this thread.
 */
const char *sd_last_error(void);

/**
 * Library version as a static string.
 */
const char *sd_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void sd_string_free(char *s);

/**
 * Matrix from `rows * cols` row-major entries.
 *
 * # Safety
 * `data` must point to `rows * cols` readable values and `out` must be
 * writable.
 */
enum SdStatus sd_matrix_new(const int64_t *data, size_t rows, size_t cols, struct SdMatrix **out);

/**
 * Matrix from JSON: a list of rows, or an object with `rows`, `cols` and
 * `entries`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum SdStatus sd_matrix_from_json(const char *json, struct SdMatrix **out);

/**
 * # Safety
 * `m` must be NULL or a handle from this library, not yet freed.
 */
void sd_matrix_free(struct SdMatrix *m);

/**
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum SdStatus sd_matrix_depths(const struct SdMatrix *m, struct SdDepths *out);

/**
 * Pipeline with the given limits; `prime_override` 0 means none.
 *
 * # Safety
 * `out` must be writable.
 */
enum SdStatus sd_pipeline_new(size_t max_group_order,
                              size_t max_tensor_budget,
                              uint64_t prime_override,
                              struct SdPipeline **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library, not yet freed.
 */
void sd_pipeline_free(struct SdPipeline *p);

/**
 * Runs the scenario described by `descriptor`, e.g.
 * `{"kind":"pair","group":"S3","subgroup":"A3"}`. A NULL pipeline uses
 * default limits.
 *
 * # Safety
 * `p` must be NULL or a live handle, `descriptor` a nul-terminated string
 * and `out` writable.
 */
enum SdStatus sd_scenario_run(const struct SdPipeline *p,
                              const char *descriptor,
                              struct SdReport **out);

/**
 * # Safety
 * `r` must be NULL or a handle from this library, not yet freed.
 */
void sd_report_free(struct SdReport *r);

/**
 * # Safety
 * `r` must be a live handle and `out` writable.
 */
enum SdStatus sd_report_depths(const struct SdReport *r, struct SdDepths *out);

/**
 * Number of audited claims in the report and how many of them failed.
 *
 * # Safety
 * `r` must be a live handle; `total` and `failed` must be writable.
 */
enum SdStatus sd_report_claims(const struct SdReport *r, size_t *total, size_t *failed);

/**
 * Full report as JSON; free the result with `sd_string_free`.
 *
 * # Safety
 * `r` must be a live handle and `out` writable.
 */
enum SdStatus sd_report_to_json(const struct SdReport *r, char **out);

/**
 * Checks the Hopf algebra axioms on structure constants given as JSON.
 * `passed` receives 1 or 0; when `report` is not NULL it receives the
 * per-axiom report as JSON.
 *
 * # Safety
 * `json` must be a nul-terminated string, `passed` writable and `report`
 * NULL or writable.
 */
enum SdStatus sd_hopf_verify(const char *json, int32_t *passed, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUBDEPTH_H */
