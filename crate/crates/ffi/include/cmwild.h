#ifndef CMWILD_H
#define CMWILD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CmwildStatus {
  CMWILD_STATUS_OK = 0,
  CMWILD_STATUS_NULL_POINTER = 1,
  CMWILD_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON, non-homogeneous data, bad sequence, ...
   */
  CMWILD_STATUS_INVALID_INPUT = 3,
  /**
   * No regular sequence within the search budget, or an undecided test.
   */
  CMWILD_STATUS_BUDGET = 4,
  CMWILD_STATUS_INTERNAL = 5,
} CmwildStatus;

/**
 * Opaque family instance: ring, regular sequence, degree and matrices.
 */
typedef struct CmwildInstance CmwildInstance;

/**
 * Opaque quotient ring `k[x]/I`.
 */
typedef struct CmwildRing CmwildRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *cmwild_last_error(void);

/**
 * Parses a ring document `{"vars": [...], "relations": [...], "p": 32003}`.
 * A nonzero `p` overrides the characteristic in the document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CmwildStatus cmwild_ring_from_json(const char *json, uint32_t p, struct CmwildRing **out);

/**
 * # Safety
 * `ring` must come from [`cmwild_ring_from_json`] or be NULL.
 */
void cmwild_ring_free(struct CmwildRing *ring);

/**
 * Krull dimension of the ring (-1 for the zero ring).
 *
 * # Safety
 * Pointers must be valid.
 */
enum CmwildStatus cmwild_ring_krull_dimension(const struct CmwildRing *ring, int64_t *out);

/**
 * `dim_k R_t`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum CmwildStatus cmwild_ring_hilbert_dim(const struct CmwildRing *ring, int32_t t, uint64_t *out);

/**
 * Runs the wildness scan and writes the JSON report to `out_json`.
 * `sequence` is a comma-separated list such as `"x^2,y^2"`, or NULL to
 * search for one with the given seed.
 *
 * # Safety
 * `ring` and `out_json` must be valid; `sequence` may be NULL.
 */
enum CmwildStatus cmwild_check(const struct CmwildRing *ring,
                               const char *sequence,
                               uint64_t seed,
                               char **out_json);

/**
 * Parses an instance document (`ring`, `sequence`, `c`, `basis`, `n`,
 * `Ax`, `Ay`). A nonzero `p` overrides the characteristic.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CmwildStatus cmwild_instance_from_json(const char *json,
                                            uint32_t p,
                                            struct CmwildInstance **out);

/**
 * # Safety
 * `inst` must come from [`cmwild_instance_from_json`] or be NULL.
 */
void cmwild_instance_free(struct CmwildInstance *inst);

/**
 * Checks the family member: `mcm` that its top syzygy is maximal
 * Cohen-Macaulay, `shifted_copy` that the degree-`m` part of that syzygy
 * modulo `y` generates `M(-m)`, `koszul_split` that `n` copies of the
 * Koszul complex split off the resolution with the complement in degrees
 * `>= c + i - 1`. Each flag is set to 1 on success, 0 otherwise; any flag
 * pointer may be NULL.
 *
 * # Safety
 * `inst` must be valid; non-NULL flag pointers must be writable.
 */
enum CmwildStatus cmwild_family_verify(const struct CmwildInstance *inst,
                                       int32_t *mcm,
                                       int32_t *shifted_copy,
                                       int32_t *koszul_split);

/**
 * Graded isomorphism test of two family members over the same frame.
 * Writes the certificate as JSON; `Budget` is returned (with the JSON
 * still written) when the outcome is undecided.
 *
 * # Safety
 * All pointers must be valid.
 */
enum CmwildStatus cmwild_iso_test(const struct CmwildInstance *a,
                                  const struct CmwildInstance *b,
                                  uint64_t seed,
                                  char **out_json);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library or be NULL.
 */
void cmwild_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CMWILD_H */
