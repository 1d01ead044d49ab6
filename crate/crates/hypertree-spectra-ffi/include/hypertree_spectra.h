#ifndef HYPERTREE_SPECTRA_H
#define HYPERTREE_SPECTRA_H

/* Generated by cbindgen from hypertree-spectra-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define HTS_OK 0

/**
 * A verification ran to completion and reported a mismatch.
 */
#define HTS_MISMATCH 1

/**
 * A resource guard tripped (degree guard, bad-point budget, timeout,
 * iteration cap).
 */
#define HTS_GUARD 2

/**
 * Invalid input: malformed JSON, inconsistent hypergraph, unknown vertex,
 * null pointer.
 */
#define HTS_INVALID 3

/**
 * Opaque hypergraph handle. Create with [`hts_hypergraph_from_json`],
 * release with [`hts_hypergraph_free`].
 */
typedef struct hts_hypergraph hts_hypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the message for the most recent error on this thread. The pointer
 * stays valid until the next failing call on the same thread; do not free it.
 */
const char *hts_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library and
 * not yet freed.
 */
void hts_string_free(char *s);

/**
 * Parses a hypergraph from its JSON form
 * `{"k": 3, "n": 5, "edges": [[0,1,2],[2,3,4]]}` and validates it. On
 * success writes a fresh handle to `out`.
 *
 * # Safety
 * `json` must be null or a NUL-terminated string; `out` must be a valid
 * pointer to writable storage.
 */
int32_t hts_hypergraph_from_json(const char *json, struct hts_hypergraph **out);

/**
 * Serializes a hypergraph back to JSON.
 *
 * # Safety
 * `h` must be null or a live handle from this library; `out` must point
 * to writable storage. The written string is released with
 * [`hts_string_free`].
 */
int32_t hts_hypergraph_to_json(const struct hts_hypergraph *h, char **out);

/**
 * Releases a hypergraph handle.
 *
 * # Safety
 * `h` must be null or a handle from this library that has not been freed.
 */
void hts_hypergraph_free(struct hts_hypergraph *h);

/**
 * Number of vertices, or -1 on a null handle.
 *
 * # Safety
 * `h` must be null or a live handle from this library.
 */
int64_t hts_vertex_count(const struct hts_hypergraph *h);

/**
 * Number of edges, or -1 on a null handle.
 *
 * # Safety
 * `h` must be null or a live handle from this library.
 */
int64_t hts_edge_count(const struct hts_hypergraph *h);

/**
 * 1 if the hypergraph is a hypertree, 0 if not, -1 on a null handle.
 *
 * # Safety
 * `h` must be null or a live handle from this library.
 */
int32_t hts_is_hypertree(const struct hts_hypergraph *h);

/**
 * Matching counts, matching polynomial and its z-reduction as JSON.
 *
 * # Safety
 * `h` must be null or a live handle; `out` must point to writable
 * storage. The written string is released with [`hts_string_free`].
 */
int32_t hts_matching_json(const struct hts_hypergraph *h, char **out);

/**
 * Distinct real eigenvalues, per-subtree root data and the spectral radius
 * as JSON. The handle must hold a hypertree.
 *
 * # Safety
 * `h` must be null or a live handle; `out` must point to writable
 * storage. The written string is released with [`hts_string_free`].
 */
int32_t hts_spectrum_json(const struct hts_hypergraph *h, char **out);

/**
 * Spectral radius by NQZ power iteration at tolerance `tol`. Writes the
 * estimate to `lambda_out`.
 *
 * # Safety
 * `h` must be null or a live handle; `lambda_out` must be null or point
 * to writable storage.
 */
int32_t hts_spectral_radius_nqz(const struct hts_hypergraph *h, double tol, double *lambda_out);

/**
 * Spectral radius as the largest real matching-polynomial root, certified
 * to width 10^-12 and reported as f64. The handle must hold a hypertree.
 *
 * # Safety
 * `h` must be null or a live handle; `lambda_out` must be null or point
 * to writable storage.
 */
int32_t hts_spectral_radius_exact(const struct hts_hypergraph *h, double *lambda_out);

/**
 * Exact characteristic polynomial via the resultant oracle, as JSON with
 * the per-sample log. `degree_guard` 0 means the default (500);
 * `timeout_per_point_ms` 0 disables the per-point timeout.
 *
 * # Safety
 * `h` must be null or a live handle; `out` must point to writable
 * storage. The written string is released with [`hts_string_free`].
 */
int32_t hts_charpoly_json(const struct hts_hypergraph *h,
                          uint64_t degree_guard,
                          uint64_t timeout_per_point_ms,
                          char **out);

/**
 * Measures the algebraic multiplicity of the spectral radius in the exact
 * characteristic polynomial and compares it with k^(m(k-2)). Returns
 * `HTS_OK` on a match, `HTS_MISMATCH` on a completed run whose measured
 * multiplicity disagrees, and writes the full report JSON either way.
 *
 * # Safety
 * `h` must be null or a live handle; `out` must point to writable
 * storage. The written string is released with [`hts_string_free`].
 */
int32_t hts_verify_multiplicity_json(const struct hts_hypergraph *h,
                                     uint64_t degree_guard,
                                     uint64_t timeout_per_point_ms,
                                     char **out);

/**
 * Attaches a pendant edge at vertex `u` and checks that the measured
 * multiplicity grows by the factor k^(k-2). Same code convention as
 * [`hts_verify_multiplicity_json`].
 *
 * # Safety
 * `h` must be null or a live handle; `out` must point to writable
 * storage. The written string is released with [`hts_string_free`].
 */
int32_t hts_pendant_growth_json(const struct hts_hypergraph *h,
                                size_t u,
                                uint64_t degree_guard,
                                uint64_t timeout_per_point_ms,
                                char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HYPERTREE_SPECTRA_H */
