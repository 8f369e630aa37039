#ifndef OLD_DIGRAPHS_H
#define OLD_DIGRAPHS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OldStatus {
  OLD_STATUS_OK = 0,
  OLD_STATUS_NULL_POINTER = 1,
  OLD_STATUS_INVALID_ARGUMENT = 2,
  OLD_STATUS_PARSE_ERROR = 3,
  /**
   * Some two vertices share an in-neighbourhood, so no OLD set exists.
   */
  OLD_STATUS_NOT_LOCATABLE = 4,
  /**
   * The forcing arcs do not form disjoint cycles covering every vertex.
   */
  OLD_STATUS_NO_FORCING_CYCLES = 5,
  OLD_STATUS_CAP_EXCEEDED = 6,
  OLD_STATUS_BUFFER_TOO_SMALL = 7,
  OLD_STATUS_PANIC = 8,
} OldStatus;

/**
 * Opaque digraph handle.
 */
typedef struct OldDigraph OldDigraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *old_last_error_message(void);

/**
 * Arcless digraph of order `n` (at most 64).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum OldStatus old_digraph_new(size_t n, struct OldDigraph **out);

/**
 * # Safety
 * `d` must be NULL or a handle from this library not yet freed.
 */
void old_digraph_free(struct OldDigraph *d);

/**
 * Adds `u → v`; `*added` is false if the arc was already present.
 *
 * # Safety
 * `d` must be a live handle; `added` may be NULL.
 */
enum OldStatus old_digraph_add_arc(struct OldDigraph *d, size_t u, size_t v, bool *added);

/**
 * Parses the edge-list text format (first line `n`, then `u v` per arc).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum OldStatus old_digraph_parse(const char *text, struct OldDigraph **out);

/**
 * # Safety
 * `d` must be a live handle; `out` must be valid for writes.
 */
enum OldStatus old_digraph_order(const struct OldDigraph *d, size_t *out);

/**
 * Edge-list text; free the result with `old_string_free`.
 *
 * # Safety
 * `d` must be a live handle; `out` must be valid for writes.
 */
enum OldStatus old_digraph_to_edge_list(const struct OldDigraph *d, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void old_string_free(char *s);

/**
 * # Safety
 * `d` must be a live handle; `out` must be valid for writes.
 */
enum OldStatus old_is_locatable(const struct OldDigraph *d, bool *out);

/**
 * Exact `γ_OL` and a minimum OLD set as a bitmask (bit `v` set for vertex
 * `v`). Returns `OLD_STATUS_NOT_LOCATABLE` when no OLD set exists.
 *
 * # Safety
 * `d` must be a live handle; `gamma` must be valid for writes; `witness`
 * may be NULL.
 */
enum OldStatus old_min_old_set(const struct OldDigraph *d, size_t *gamma, uint64_t *witness);

/**
 * Whether `γ_OL = n`, by exhaustive check.
 *
 * # Safety
 * `d` must be a live handle; `out` must be valid for writes.
 */
enum OldStatus old_is_extremal(const struct OldDigraph *d, bool *out);

/**
 * Whether `γ_OL = n`, from the forcing structure alone.
 *
 * # Safety
 * `d` must be a live handle; `out` must be valid for writes.
 */
enum OldStatus old_is_extremal_structural(const struct OldDigraph *d, bool *out);

/**
 * Writes `f⁺(v)` for every vertex into `out[0..n]` when the forcing arcs
 * form disjoint cycles covering the vertex set.
 *
 * # Safety
 * `d` must be a live handle; `out` must be valid for `len` writes.
 */
enum OldStatus old_forcing_successors(const struct OldDigraph *d, size_t *out, size_t len);

/**
 * Isomorphism invariant: two digraphs of the same order are isomorphic iff
 * their codes are equal. Orders above 10 give `OLD_STATUS_CAP_EXCEEDED`.
 *
 * # Safety
 * `d` must be a live handle; `hi` and `lo` must be valid for writes.
 */
enum OldStatus old_canonical_form(const struct OldDigraph *d, uint64_t *hi, uint64_t *lo);

/**
 * The half-graph `H_k` as a symmetric loop-free digraph of order `2k`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum OldStatus old_half_graph(size_t k, struct OldDigraph **out);

/**
 * Transitive closure of a rooted tree given by `parents[0..n]`, where a
 * negative entry marks the root; loops are added when `loops` is true.
 *
 * # Safety
 * `parents` must be valid for `n` reads; `out` must be valid for writes.
 */
enum OldStatus old_tc_tree(const ptrdiff_t *parents, size_t n, bool loops, struct OldDigraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OLD_DIGRAPHS_H */
