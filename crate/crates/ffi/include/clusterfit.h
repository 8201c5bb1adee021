#ifndef CLUSTERFIT_H
#define CLUSTERFIT_H

/* Generated by cbindgen from crates/ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CfMeasure {
  CF_MEASURE_CONDUCTANCE = 0,
  CF_MEASURE_LOCAL_DENSITY = 1,
  CF_MEASURE_RELATIVE_DENSITY = 2,
  CF_MEASURE_EDITING = 3,
} CfMeasure;

typedef enum CfProblem {
  CF_PROBLEM_CONDUCTANCE = 0,
  CF_PROBLEM_LOCAL_DENSITY = 1,
  CF_PROBLEM_RELATIVE_DENSITY = 2,
  CF_PROBLEM_EDITING = 3,
  CF_PROBLEM_MAX_CUT = 4,
  CF_PROBLEM_MIN_BISECTION = 5,
} CfProblem;

typedef enum CfStatus {
  CF_STATUS_OK = 0,
  CF_STATUS_NULL_POINTER = 1,
  CF_STATUS_INVALID_UTF8 = 2,
  CF_STATUS_PARSE = 3,
  CF_STATUS_INVALID_ARGUMENT = 4,
  CF_STATUS_NOT_CUBIC = 5,
  CF_STATUS_OUT_OF_RANGE = 6,
  CF_STATUS_PANIC = 7,
} CfStatus;

/**
 * Opaque graph handle.
 */
typedef struct CfGraph CfGraph;

/**
 * Reduced fraction, `den > 0`.
 */
typedef struct CfRational {
  int64_t num;
  int64_t den;
} CfRational;

typedef struct CfOptimum {
  struct CfRational value;
  uint64_t witness_mask;
  uint64_t explored;
  bool degenerate;
} CfOptimum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL after a success.
 * The pointer stays valid until the next `cf_*` call on the same thread.
 */
const char *cf_last_error(void);

/**
 * Parses graph-file text (`p <n> <m>` header, `e <u> <v>` lines).
 */
enum CfStatus cf_graph_parse(const char *text, struct CfGraph **out);

/**
 * Builds a graph from `n_edges` pairs laid out as `[u0, v0, u1, v1, ...]`.
 */
enum CfStatus cf_graph_from_edges(size_t n,
                                  const size_t *pairs,
                                  size_t n_edges,
                                  struct CfGraph **out);

/**
 * Releases a handle. NULL is ignored.
 */
void cf_graph_free(struct CfGraph *g);

/**
 * Vertex count, or 0 for NULL.
 */
size_t cf_graph_vertex_count(const struct CfGraph *g);

/**
 * Edge count, or 0 for NULL.
 */
size_t cf_graph_edge_count(const struct CfGraph *g);

bool cf_graph_is_cubic(const struct CfGraph *g);

/**
 * Canonical file text. Release with `cf_string_free`. NULL on a NULL handle.
 */
char *cf_graph_write(const struct CfGraph *g);

void cf_string_free(char *s);

/**
 * Evaluates one measure on the subset given by `len` vertex ids.
 */
enum CfStatus cf_measure(const struct CfGraph *g,
                         enum CfMeasure kind,
                         const size_t *members,
                         size_t len,
                         struct CfRational *out);

/**
 * Exact optimum. `k` is the cardinality for density and editing problems and must
 * be 0 otherwise. `workers` of 0 or 1 searches on the calling thread.
 */
enum CfStatus cf_optimize(const struct CfGraph *g,
                          enum CfProblem problem,
                          size_t k,
                          size_t workers,
                          struct CfOptimum *out);

/**
 * Decision query: `answer` is set to whether some subset meets `threshold`;
 * `optimum` (may be NULL) receives the optimum the answer was derived from.
 */
enum CfStatus cf_decide(const struct CfGraph *g,
                        enum CfProblem problem,
                        size_t k,
                        struct CfRational threshold,
                        bool *answer,
                        struct CfOptimum *optimum);

/**
 * Conductance gadget of a cubic source and its threshold. The new handle in
 * `target` must be released with `cf_graph_free`.
 */
enum CfStatus cf_reduce_conductance(const struct CfGraph *source,
                                    uint64_t a,
                                    struct CfGraph **target,
                                    struct CfRational *phi);

/**
 * Relative-density instance parameters; the target graph is the source itself.
 */
enum CfStatus cf_reduce_density(const struct CfGraph *source,
                                uint64_t a,
                                size_t *k,
                                struct CfRational *r);

/**
 * Single-cluster-editing instance parameters; the target graph is the source itself.
 */
enum CfStatus cf_reduce_editing(const struct CfGraph *source,
                                uint64_t a,
                                size_t *k,
                                struct CfRational *m);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLUSTERFIT_H */
