#ifndef NCC_H
#define NCC_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Selector for the four counting sequences.
typedef enum NccSequence {
  NCC_SEQUENCE_A = 0,
  NCC_SEQUENCE_B = 1,
  NCC_SEQUENCE_C = 2,
  NCC_SEQUENCE_D = 3,
} NccSequence;

// Result of every fallible call in this API.
typedef enum NccStatus {
  NCC_STATUS_OK = 0,
  // A required pointer argument was NULL.
  NCC_STATUS_NULL_ARGUMENT = 1,
  // An argument was outside the supported range.
  NCC_STATUS_INVALID_ARGUMENT = 2,
  // An index below the first defined index of a sequence.
  NCC_STATUS_DOMAIN = 3,
  // A string argument was not valid UTF-8.
  NCC_STATUS_UTF8 = 4,
  // A power-series coefficient was not exactly divisible.
  NCC_STATUS_INEXACT = 5,
} NccStatus;

// Opaque list of compositions produced by [`ncc_enumerate`].
typedef struct NccEnumeration NccEnumeration;

// Outcome of one exhaustive bijection check.
typedef struct NccBijectionSummary {
  uint32_t n;
  // Sources assigned to each of the three classes.
  uint64_t class_i;
  uint64_t class_ii;
  uint64_t class_iii;
  // Sources whose round trip through the inverse map failed.
  uint64_t round_trip_failures;
  // True when all class counts match the expected size and every check
  // passed.
  bool valid;
} NccBijectionSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Enumerates compositions of weight `nu` into a new handle. Pass
// `parts = -1` for any number of parts, and `self_inverse = true` to keep
// only palindromic compositions.
//
// # Safety
// `out` must be a valid pointer. The handle must be released with
// [`ncc_enumeration_free`].
enum NccStatus ncc_enumerate(uint32_t nu,
                             bool self_inverse,
                             int64_t parts,
                             struct NccEnumeration **out);

// Number of compositions in the handle; 0 for NULL.
//
// # Safety
// `handle` must be NULL or a pointer returned by [`ncc_enumerate`].
uintptr_t ncc_enumeration_len(const struct NccEnumeration *handle);

// Writes the text form (`"2_1 1_1 2_1"`) of the composition at `index`.
//
// # Safety
// `handle` must come from [`ncc_enumerate`] and `out` must be valid. The
// string must be released with [`ncc_string_free`].
enum NccStatus ncc_enumeration_text(const struct NccEnumeration *handle,
                                    uintptr_t index,
                                    char **out);

// Releases a handle returned by [`ncc_enumerate`]. NULL is a no-op.
//
// # Safety
// `handle` must not be used afterwards.
void ncc_enumeration_free(struct NccEnumeration *handle);

// Releases a string returned by any function in this API. NULL is a no-op.
//
// # Safety
// `s` must have been allocated by this library and not freed before.
void ncc_string_free(char *s);

// Number of compositions of `nu`, as a decimal string.
//
// # Safety
// `out` must be valid; free the result with [`ncc_string_free`].
enum NccStatus ncc_count_compositions(uint64_t nu, char **out);

// Number of compositions of `nu` with exactly `m` parts.
//
// # Safety
// As for [`ncc_count_compositions`].
enum NccStatus ncc_count_compositions_m(uint64_t nu, uint64_t m, char **out);

// Number of self-inverse compositions of `nu`.
//
// # Safety
// As for [`ncc_count_compositions`].
enum NccStatus ncc_count_self_inverse(uint64_t nu, char **out);

// Number of self-inverse compositions of `nu` with exactly `m` parts.
//
// # Safety
// As for [`ncc_count_compositions`].
enum NccStatus ncc_count_self_inverse_m(uint64_t nu, uint64_t m, char **out);

// `F_n` as a decimal string.
//
// # Safety
// As for [`ncc_count_compositions`].
enum NccStatus ncc_fibonacci(uint64_t n, char **out);

// `L_n` as a decimal string.
//
// # Safety
// As for [`ncc_count_compositions`].
enum NccStatus ncc_lucas(uint64_t n, char **out);

// Binomial coefficient with the zero convention for out-of-range indices.
//
// # Safety
// As for [`ncc_count_compositions`].
enum NccStatus ncc_binomial(int64_t n, int64_t k, char **out);

// Value of sequence `id` at index `n`.
//
// # Safety
// As for [`ncc_count_compositions`].
enum NccStatus ncc_seq(enum NccSequence id, uint64_t n, char **out);

// `len` consecutive values of sequence `id` from `start`, comma-joined.
//
// # Safety
// As for [`ncc_count_compositions`].
enum NccStatus ncc_seq_window(enum NccSequence id, uint64_t start, uintptr_t len, char **out);

// Expands `num / den` to `terms` power-series coefficients, comma-joined.
// Coefficient arrays are ascending in degree.
//
// # Safety
// `num` and `den` must point to `num_len` and `den_len` readable values
// (NULL is accepted for zero-length arrays); `out` must be valid.
enum NccStatus ncc_expand(const int64_t *num,
                          uintptr_t num_len,
                          const int64_t *den,
                          uintptr_t den_len,
                          uintptr_t terms,
                          char **out);

// Number of restricted lattice paths to `(2*nu+1-k, k)`.
//
// # Safety
// As for [`ncc_count_compositions`].
enum NccStatus ncc_path_count(uint32_t nu, uint32_t k, char **out);

// Row total over all `k`, which equals `lucas(2*nu + 1)`.
//
// # Safety
// As for [`ncc_count_compositions`].
enum NccStatus ncc_path_total(uint32_t nu, char **out);

// Sweeps the identity named by `label` (T5.1, T6.1i, T6.1ii or T6.2b)
// up to `max_index` and reports whether every instance held.
//
// # Safety
// `label` must be a NUL-terminated string and `all_hold` a valid pointer.
enum NccStatus ncc_verify(const char *label, uint64_t max_index, bool *all_hold);

// Runs the exhaustive three-class bijection check for instance `n`.
//
// # Safety
// `out` must be a valid pointer.
enum NccStatus ncc_bijection_check(uint32_t n, struct NccBijectionSummary *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCC_H */
