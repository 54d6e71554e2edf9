#ifndef PFAFFIAN_IDEALS_H
#define PFAFFIAN_IDEALS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PfiStatus {
  PFI_STATUS_OK = 0,
  PFI_STATUS_NULL_POINTER = 1,
  PFI_STATUS_INVALID_INPUT = 2,
  PFI_STATUS_PRECONDITION = 3,
  PFI_STATUS_LIMIT_EXCEEDED = 4,
  PFI_STATUS_VIOLATION = 5,
  PFI_STATUS_INTERNAL = 6,
} PfiStatus;

/**
 * Opaque cogenerator spec `(alpha, n)`.
 */
typedef struct PfiSpec PfiSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failed call on this thread, or null. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *pfi_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void pfi_string_free(char *s);

/**
 * Builds a spec from `alpha[0..len]` and `n`.
 *
 * # Safety
 * `alpha` must point to `len` readable integers; `out` must be writable.
 */
enum PfiStatus pfi_spec_new(const uint32_t *alpha, size_t len, uint32_t n, struct PfiSpec **out);

/**
 * # Safety
 * `spec` must come from [`pfi_spec_new`] and not have been freed.
 */
void pfi_spec_free(struct PfiSpec *spec);

/**
 * # Safety
 * `spec` must be live; `out` writable.
 */
enum PfiStatus pfi_spec_is_g_pfaffian(const struct PfiSpec *spec, bool *out);

/**
 * Multiplicity as a decimal string.
 *
 * # Safety
 * `spec` must be live; `out` writable.
 */
enum PfiStatus pfi_multiplicity(const struct PfiSpec *spec, char **out);

/**
 * Number of facets of the complex of the (reduced) spec.
 *
 * # Safety
 * `spec` must be live; `out` writable.
 */
enum PfiStatus pfi_facet_count(const struct PfiSpec *spec, uint64_t *out);

/**
 * Initial-ideal generators as JSON.
 *
 * # Safety
 * `spec` must be live; `out` writable.
 */
enum PfiStatus pfi_initial_ideal_json(const struct PfiSpec *spec, bool minimal, char **out);

/**
 * Counterexample element for a cogenerator that is not G-Pfaffian, as JSON.
 *
 * # Safety
 * `spec` must be live; `out` writable.
 */
enum PfiStatus pfi_counterexample_json(const struct PfiSpec *spec, char **out);

/**
 * Pfaffian of the principal submatrix `indices[0..len]` of an `n x n`
 * matrix, as JSON.
 *
 * # Safety
 * `indices` must point to `len` readable integers; `out` writable.
 */
enum PfiStatus pfi_pfaffian_json(const uint32_t *indices, size_t len, uint32_t n, char **out);

/**
 * BKRS of `{"columns":[...]}`, as JSON.
 *
 * # Safety
 * `tableau` must be a nul-terminated string; `out` writable.
 */
enum PfiStatus pfi_bkrs_json(const char *tableau, char **out);

/**
 * KRS of two tableaux of equal shape, as JSON.
 *
 * # Safety
 * `left` and `right` must be nul-terminated strings; `out` writable.
 */
enum PfiStatus pfi_krs_json(const char *left, const char *right, char **out);

/**
 * Inverse BKRS of `{"pairs":[[u,v],...]}`, as JSON.
 *
 * # Safety
 * `array` must be a nul-terminated string; `out` writable.
 */
enum PfiStatus pfi_bkrs_inverse_json(const char *array, char **out);

/**
 * Runs the command line with `argv[0..argc]` (without the program name).
 * Writes the process exit status to `exit_status` and the captured
 * streams to `out_stdout` and `out_stderr`.
 *
 * # Safety
 * `argv` must hold `argc` nul-terminated strings; outputs writable.
 */
enum PfiStatus pfi_cli_run(const char *const *argv,
                           size_t argc,
                           int32_t *exit_status,
                           char **out_stdout,
                           char **out_stderr);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PFAFFIAN_IDEALS_H */
