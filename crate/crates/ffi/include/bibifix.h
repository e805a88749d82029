#ifndef BIBIFIX_H
#define BIBIFIX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BbfMethod {
  BBF_METHOD_RECURSIVE = 0,
  BBF_METHOD_BRUTE = 1,
} BbfMethod;

typedef enum BbfStatus {
  BBF_STATUS_OK = 0,
  /**
   * The checked property does not hold; not an error.
   */
  BBF_STATUS_FALSE = 1,
  BBF_STATUS_INVALID_INPUT = 2,
  BBF_STATUS_BUDGET_EXCEEDED = 3,
  BBF_STATUS_NO_GRAY_ORDER = 4,
  BBF_STATUS_NULL_POINTER = 5,
  BBF_STATUS_BUFFER_TOO_SMALL = 6,
  BBF_STATUS_PANIC = 7,
} BbfStatus;

/**
 * Opaque cross-bibifix-free matrix code.
 */
typedef struct BbfCode BbfCode;

/**
 * Opaque Gray-order iterator over a code.
 */
typedef struct BbfGray BbfGray;

/**
 * Opaque set of bibifix-free matrices.
 */
typedef struct BbfMatrixSet BbfMatrixSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the calling thread's last error message (NUL-terminated, truncated
 * to fit) into `buf` and returns the full message length in bytes.
 *
 * # Safety
 * `buf` must be NULL or point to `cap` writable bytes.
 */
size_t bbf_last_error(char *buf, size_t cap);

/**
 * `Ok` when the word is bifix-free, `False` when it has a bifix.
 *
 * # Safety
 * `symbols` must point to `len` readable bytes.
 */
enum BbfStatus bbf_is_bifix_free(const uint8_t *symbols, size_t len, uint8_t q);

/**
 * `Ok` when the `n x n` matrix is bibifix-free, `False` otherwise.
 *
 * # Safety
 * `cells` must point to `n * n` readable bytes.
 */
enum BbfStatus bbf_is_bibifix_free(const uint8_t *cells, size_t n, uint8_t q);

/**
 * `Ok` when two distinct `n x n` matrices are cross-bibifix-free.
 *
 * # Safety
 * `a` and `b` must each point to `n * n` readable bytes.
 */
enum BbfStatus bbf_is_cross_bibifix_free_pair(const uint8_t *a,
                                              const uint8_t *b,
                                              size_t n,
                                              uint8_t q);

/**
 * Writes `|BF_n^q|` as a NUL-terminated decimal string.
 *
 * # Safety
 * `buf` must point to `cap` writable bytes.
 */
enum BbfStatus bbf_count_bf(size_t n, uint8_t q, char *buf, size_t cap);

/**
 * Writes `|BBF_n^q|` as a NUL-terminated decimal string.
 *
 * # Safety
 * `buf` must point to `cap` writable bytes.
 */
enum BbfStatus bbf_count_bbf(size_t n, uint8_t q, char *buf, size_t cap);

/**
 * Generates every bibifix-free `n x n` matrix in canonical order.
 *
 * # Safety
 * `out` must be a valid pointer; the handle it receives must be released
 * with [`bbf_set_free`].
 */
enum BbfStatus bbf_generate(size_t n,
                            uint8_t q,
                            enum BbfMethod method,
                            uint64_t budget_cap,
                            struct BbfMatrixSet **out);

/**
 * Number of matrices in the set.
 *
 * # Safety
 * `set` must be a live handle and `len` a valid pointer.
 */
enum BbfStatus bbf_set_len(const struct BbfMatrixSet *set, size_t *len);

/**
 * Copies member `index` into `cells_out` (`n * n` bytes).
 *
 * # Safety
 * `set` must be a live handle and `cells_out` must have room for `n * n`
 * bytes.
 */
enum BbfStatus bbf_set_get(const struct BbfMatrixSet *set, size_t index, uint8_t *cells_out);

/**
 * # Safety
 * `set` must be NULL or a handle from [`bbf_generate`] not yet freed.
 */
void bbf_set_free(struct BbfMatrixSet *set);

/**
 * Builds the default cross-bibifix-free code `CBBF_n^q`.
 *
 * # Safety
 * `out` must be a valid pointer; release the handle with [`bbf_code_free`].
 */
enum BbfStatus bbf_code_build(size_t n, uint8_t q, uint64_t budget_cap, struct BbfCode **out);

/**
 * Builds a code from `count` caller-chosen diagonal words of length `n`,
 * laid out back to back in `words`. The words only need to be distinct;
 * use the verifiers to check the resulting code.
 *
 * # Safety
 * `words` must point to `count * n` readable bytes and `out` must be valid.
 */
enum BbfStatus bbf_code_with_diagonal(size_t n,
                                      uint8_t q,
                                      const uint8_t *words,
                                      size_t count,
                                      struct BbfCode **out);

/**
 * Code size; `InvalidInput` if it does not fit in 64 bits.
 *
 * # Safety
 * `code` must be a live handle and `len` a valid pointer.
 */
enum BbfStatus bbf_code_len(const struct BbfCode *code, uint64_t *len);

/**
 * `Ok` when the matrix is a member of the code.
 *
 * # Safety
 * `code` must be a live handle and `cells` must point to `n * n` bytes,
 * where `n` is the code's dimension.
 */
enum BbfStatus bbf_code_contains(const struct BbfCode *code, const uint8_t *cells);

/**
 * Materializes the code and checks pairwise cross-bibifix-freeness.
 *
 * # Safety
 * `code` must be a live handle.
 */
enum BbfStatus bbf_code_verify_cross(const struct BbfCode *code, uint64_t budget_cap);

/**
 * `Ok` when no bibifix-free matrix outside the code can be added to it.
 * On `False`, an expanding matrix is written to `witness_out` if it is not
 * NULL.
 *
 * # Safety
 * `code` must be a live handle; `witness_out` must be NULL or have room for
 * `n * n` bytes.
 */
enum BbfStatus bbf_code_verify_nonexpandable(const struct BbfCode *code,
                                             uint64_t budget_cap,
                                             uint8_t *witness_out);

/**
 * # Safety
 * `code` must be NULL or a code handle not yet freed.
 */
void bbf_code_free(struct BbfCode *code);

/**
 * Starts a Hamming-distance-1 listing of the code. The iterator does not
 * borrow the code handle.
 *
 * # Safety
 * `code` must be a live handle and `out` a valid pointer; release the
 * iterator with [`bbf_gray_free`].
 */
enum BbfStatus bbf_gray_new(const struct BbfCode *code, uint64_t budget_cap, struct BbfGray **out);

/**
 * Writes the next matrix to `cells_out` and returns `Ok`, or returns
 * `False` once the listing is exhausted.
 *
 * # Safety
 * `gray` must be a live iterator and `cells_out` must have room for
 * `n * n` bytes.
 */
enum BbfStatus bbf_gray_next(struct BbfGray *gray, uint8_t *cells_out);

/**
 * # Safety
 * `gray` must be NULL or an iterator handle not yet freed.
 */
void bbf_gray_free(struct BbfGray *gray);

/**
 * 1-based position of off-diagonal cell `(i, j)` (1-based) in the
 * linearised off-diagonal word of an `n x n` matrix.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BbfStatus bbf_f_index(size_t i, size_t j, size_t n, size_t *out);

/**
 * Rebuilds an `n x n` matrix from its `n * n - n` off-diagonal symbols and
 * its `n` diagonal symbols.
 *
 * # Safety
 * `offdiag` must point to `n * n - n` bytes, `diagonal` to `n` bytes and
 * `cells_out` to `n * n` writable bytes.
 */
enum BbfStatus bbf_offdiag_decode(const uint8_t *offdiag,
                                  const uint8_t *diagonal,
                                  size_t n,
                                  uint8_t q,
                                  uint8_t *cells_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIBIFIX_H */
