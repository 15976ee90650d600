#ifndef GALEKIT_H
#define GALEKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define GK_MODE_ALT 0

#define GK_MODE_SALT 1

#define GK_VERIFY_AUTO 0

#define GK_VERIFY_EXACT 1

#define GK_VERIFY_SAMPLED 2

/**
 * Result of every fallible call.
 */
typedef enum GkStatus {
  GK_STATUS_OK = 0,
  GK_STATUS_NULL_POINTER = 1,
  GK_STATUS_INVALID_INPUT = 2,
  GK_STATUS_CAPACITY = 3,
  GK_STATUS_INTERNAL = 4,
  GK_STATUS_NOT_FOUND = 5,
} GkStatus;

/**
 * Opaque graph handle.
 */
typedef struct GkGraph GkGraph;

/**
 * Opaque hypergraph handle.
 */
typedef struct GkHypergraph GkHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the most recent failure on this thread, or NULL. Valid
 * until the next `gk_*` call on the same thread.
 */
const char *gk_last_error(void);

/**
 * Release a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void gk_string_free(char *s);

/**
 * Build a hypergraph from a spec such as `"kneser:5,2"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum GkStatus gk_hypergraph_from_family(const char *spec, struct GkHypergraph **out);

/**
 * Parse `{"vertices": [...], "edges": [[...], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum GkStatus gk_hypergraph_from_json(const char *json, struct GkHypergraph **out);

/**
 * # Safety
 * `h` must come from this library and not have been freed. NULL is ignored.
 */
void gk_hypergraph_free(struct GkHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle; the out-pointers must be writable.
 */
enum GkStatus gk_hypergraph_counts(const struct GkHypergraph *h, size_t *vertices, size_t *edges);

/**
 * `alt(H,σ)` or `salt(H,σ)`. `sigma` lists vertex indices in order; pass
 * NULL for the identity.
 *
 * # Safety
 * `h` must be a live handle; `sigma` must point to `sigma_len` entries
 * unless NULL; `out` must be writable.
 */
enum GkStatus gk_hypergraph_alternation(const struct GkHypergraph *h,
                                        uint32_t mode_code,
                                        const size_t *sigma,
                                        size_t sigma_len,
                                        size_t *out);

/**
 * Minimum of `alt`/`salt` over orderings. `exact` is false when the value
 * comes from local search (then it is an upper bound).
 *
 * # Safety
 * `h` must be a live handle; the out-pointers must be writable.
 */
enum GkStatus gk_hypergraph_alt_min(const struct GkHypergraph *h,
                                    uint32_t mode_code,
                                    uint64_t seed,
                                    size_t *value,
                                    bool *exact);

/**
 * Colorability defect.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GkStatus gk_hypergraph_defect(const struct GkHypergraph *h, size_t *out);

/**
 * The full bound report as JSON; release with [`gk_string_free`].
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GkStatus gk_bound_report_json(const struct GkHypergraph *h, char **out);

/**
 * Build the moment-curve configuration at the identity ordering and verify
 * it. `ok` is false if a hemisphere misses the property.
 *
 * # Safety
 * `h` must be a live handle; the out-pointers must be writable.
 */
enum GkStatus gk_gale_verify(const struct GkHypergraph *h,
                             uint32_t mode_code,
                             uint32_t verify,
                             size_t trials,
                             uint64_t seed,
                             size_t *dimension,
                             bool *ok);

/**
 * `KG(H)`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GkStatus gk_graph_kneser(const struct GkHypergraph *h, struct GkGraph **out);

/**
 * Parse `{"vertices": [...], "adjacency": [[...], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum GkStatus gk_graph_from_json(const char *json, struct GkGraph **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed. NULL is ignored.
 */
void gk_graph_free(struct GkGraph *g);

/**
 * # Safety
 * `g` must be a live handle; the out-pointers must be writable.
 */
enum GkStatus gk_graph_counts(const struct GkGraph *g, size_t *vertices, size_t *edges);

/**
 * Exact chromatic number; refused above 120 vertices.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum GkStatus gk_graph_chromatic_number(const struct GkGraph *g, size_t *out);

/**
 * Smallest `n ≤ n_max` with an `m`-fold `n`-coloring.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum GkStatus gk_graph_multichromatic_number(const struct GkGraph *g,
                                             size_t m,
                                             size_t n_max,
                                             size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GALEKIT_H */
