/* C interface for the powergraph library. Generated by the build script — do not edit. */

#ifndef POWERGRAPH_H
#define POWERGRAPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum PgStatus {
  /**
   * The call succeeded.
   */
  PG_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  PG_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  PG_STATUS_INVALID_UTF8 = 2,
  /**
   * A Cayley-table document could not be parsed.
   */
  PG_STATUS_PARSE = 3,
  /**
   * A family spec was malformed or out of range.
   */
  PG_STATUS_INVALID_SPEC = 4,
  /**
   * The magma is not power-associative, so the requested analysis is
   * undefined on it.
   */
  PG_STATUS_NOT_POWER_ASSOCIATIVE = 5,
  /**
   * An index or numeric argument was out of range.
   */
  PG_STATUS_INVALID_ARGUMENT = 6,
  /**
   * The verification suite found a failing claim.
   */
  PG_STATUS_VERIFICATION_FAILED = 7,
  /**
   * An internal panic was caught at the ABI boundary.
   */
  PG_STATUS_PANIC = 8,
} PgStatus;

/**
 * Opaque handle to a finite magma (a Cayley table with optional element
 * names). Create with [`pg_magma_from_spec`] or [`pg_magma_from_text`],
 * release with [`pg_magma_free`].
 */
typedef struct PgMagma PgMagma;

/**
 * Witness of a power-associativity failure: evaluating the element's
 * a+b-th power directly differs from combining its a-th and b-th powers.
 */
typedef struct PgPowerWitness {
  uint64_t element;
  uint64_t a;
  uint64_t b;
} PgPowerWitness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a magma from a family spec such as `"cyclic(12)"`,
 * `"monogenic(3,2)"`, or `"product(dihedral(4),cyclic(3))"`.
 *
 * On success writes a fresh handle to `out` and returns `Ok`.
 *
 * # Safety
 *
 * `spec` must point to a NUL-terminated string; `out` must be a valid
 * pointer to writable memory for one pointer.
 */
enum PgStatus pg_magma_from_spec(const char *spec, struct PgMagma **out);

/**
 * Builds a magma from a Cayley-table document in the plain-text format
 * (first line the element count N, then N rows of N zero-based indices;
 * `#` starts a comment, `# name: <index> <display>` names an element).
 *
 * # Safety
 *
 * `text` must point to a NUL-terminated string; `out` must be a valid
 * pointer to writable memory for one pointer.
 */
enum PgStatus pg_magma_from_text(const char *text, struct PgMagma **out);

/**
 * Releases a magma handle. NULL is ignored.
 *
 * # Safety
 *
 * `m` must be NULL or a handle obtained from this library that has not
 * been freed already.
 */
void pg_magma_free(struct PgMagma *m);

/**
 * Number of elements, or 0 for a NULL handle.
 *
 * # Safety
 *
 * `m` must be NULL or a live handle from this library.
 */
uint64_t pg_magma_size(const struct PgMagma *m);

/**
 * Looks up one product: writes `a * b` to `out`.
 *
 * # Safety
 *
 * `m` must be a live handle; `out` must point to writable memory for one
 * `u64`.
 */
enum PgStatus pg_magma_op(const struct PgMagma *m, uint64_t a, uint64_t b, uint64_t *out);

/**
 * Serializes the magma to the plain-text Cayley format. The returned
 * string must be released with [`pg_string_free`].
 *
 * # Safety
 *
 * `m` must be a live handle; `out` must point to writable memory for one
 * pointer.
 */
enum PgStatus pg_magma_serialize(const struct PgMagma *m, char **out);

/**
 * Checks power associativity. Returns `Ok` when every element's powers
 * are well-defined; otherwise returns `NotPowerAssociative` and, when
 * `witness` is non-NULL, fills it with a failing (element, a, b) triple.
 *
 * # Safety
 *
 * `m` must be a live handle; `witness` must be NULL or point to writable
 * memory for one `PgPowerWitness`.
 */
enum PgStatus pg_check_power_associativity(const struct PgMagma *m, struct PgPowerWitness *witness);

/**
 * Runs the full analysis and writes the JSON report (element profiles,
 * coloring and clique statistics, claim verdicts) to `out`. The report is
 * written even when verification fails; the status then says
 * `VerificationFailed`. Release the string with [`pg_string_free`].
 *
 * # Safety
 *
 * `m` must be a live handle; `out` must point to writable memory for one
 * pointer.
 */
enum PgStatus pg_analyze_json(const struct PgMagma *m, char **out);

/**
 * Runs the claim suite: `Ok` when every claim passes,
 * `VerificationFailed` otherwise.
 *
 * # Safety
 *
 * `m` must be a live handle.
 */
enum PgStatus pg_verify(const struct PgMagma *m);

/**
 * Writes lower and upper bounds on the chromatic number of the power
 * graph. The bounds coincide when the exact value was computed; above the
 * solver's size limit they come from the largest clique found and the
 * greedy coloring. Requires a power-associative magma.
 *
 * # Safety
 *
 * `m` must be a live handle; `lower` and `upper` must point to writable
 * memory for one `u64` each.
 */
enum PgStatus pg_chromatic_bounds(const struct PgMagma *m, uint64_t *lower, uint64_t *upper);

/**
 * Writes the number of distinct tags the structural coloring uses on
 * this magma's power graph. Requires a power-associative magma.
 *
 * # Safety
 *
 * `m` must be a live handle; `out` must point to writable memory for one
 * `u64`.
 */
enum PgStatus pg_palette_size(const struct PgMagma *m, uint64_t *out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 *
 * `s` must be NULL or a string obtained from this library that has not
 * been freed already.
 */
void pg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POWERGRAPH_H */
