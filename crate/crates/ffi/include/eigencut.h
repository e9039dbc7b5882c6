#ifndef EIGENCUT_H
#define EIGENCUT_H

/* Generated by cbindgen from the Rust sources; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call. Anything other than `Ok` leaves a
 * human-readable explanation in [`ec_last_error_message`].
 */
typedef enum {
  /**
   * The call succeeded and the out-parameters are valid.
   */
  EC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  EC_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  EC_STATUS_INVALID_UTF8 = 2,
  /**
   * The input text is not a valid graph.
   */
  EC_STATUS_PARSE_ERROR = 3,
  /**
   * The arguments lie outside the operation's domain.
   */
  EC_STATUS_DOMAIN = 4,
} EcStatus;

/**
 * Opaque handle to an undirected multigraph.
 */
typedef struct EcGraph EcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on the calling thread, or
 * an empty string if nothing failed yet. The pointer stays valid until
 * the next failing call on the same thread.
 */
const char *ec_last_error_message(void);

/**
 * Parse a graph from `.mg` text into a fresh handle.
 *
 * On success writes the handle to `out` and returns `Ok`; on failure
 * `out` is untouched.
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` to writable
 * storage for one pointer.
 */
EcStatus ec_graph_parse_mg(const char *text, EcGraph **out);

/**
 * Release a handle returned by [`ec_graph_parse_mg`]. Null is ignored.
 *
 * # Safety
 * `graph` must be a handle from this library that has not been freed.
 */
void ec_graph_free(EcGraph *graph);

/**
 * Number of vertices, or 0 when the handle is null.
 *
 * # Safety
 * `graph` must be null or a live handle from this library.
 */
size_t ec_graph_order(const EcGraph *graph);

/**
 * Serialize the graph back to `.mg` text.
 *
 * # Safety
 * `graph` must be a live handle and `out` writable storage for one
 * pointer; the result must be released with [`ec_string_free`].
 */
EcStatus ec_graph_to_mg(const EcGraph *graph, char **out);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be a string from this library that has not been freed.
 */
void ec_string_free(char *s);

/**
 * Second-largest adjacency eigenvalue. Needs at least 2 vertices.
 *
 * # Safety
 * `graph` must be a live handle and `out` writable storage for one f64.
 */
EcStatus ec_graph_lambda2(const EcGraph *graph, double *out);

/**
 * Second-smallest Laplacian eigenvalue. Needs at least 2 vertices.
 *
 * # Safety
 * `graph` must be a live handle and `out` writable storage for one f64.
 */
EcStatus ec_graph_mu2(const EcGraph *graph, double *out);

/**
 * Exact vertex connectivity (0 for disconnected graphs).
 *
 * # Safety
 * `graph` must be a live handle and `out` writable storage for one u32.
 */
EcStatus ec_graph_vertex_connectivity(const EcGraph *graph, uint32_t *out);

/**
 * Exact edge connectivity, multiplicities counted (0 if disconnected).
 *
 * # Safety
 * `graph` must be a live handle and `out` writable storage for one u64.
 */
EcStatus ec_graph_edge_connectivity(const EcGraph *graph, uint64_t *out);

/**
 * The refined cut-edge eigenvalue threshold rho(d, n) for odd d >= 3
 * and even n >= 6.
 *
 * # Safety
 * `out` must be writable storage for one f64.
 */
EcStatus ec_rho(uint32_t d, size_t n, double *out);

/**
 * Evaluate every bound rule against the graph and return the full
 * certificate as a JSON document.
 *
 * Pass `t` as -1 to sweep the parametric rules over their whole range,
 * or a non-negative value to pin them to that t.
 *
 * # Safety
 * `graph` must be a live handle and `out` writable storage for one
 * pointer; the result must be released with [`ec_string_free`].
 */
EcStatus ec_graph_certify_json(const EcGraph *graph, int64_t t, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EIGENCUT_H */
