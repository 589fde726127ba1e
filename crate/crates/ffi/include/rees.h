#ifndef REES_H
#define REES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result of every fallible call.
 */
typedef enum ReesStatus {
  REES_STATUS_OK = 0,
  REES_STATUS_NULL_POINTER = 1,
  /**
   * Malformed input or a violated precondition.
   */
  REES_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A budget counter ran out.
   */
  REES_STATUS_BUDGET = 3,
  /**
   * A degree cap was reached without a witness.
   */
  REES_STATUS_CAP_EXCEEDED = 4,
  /**
   * A result does not fit the output type.
   */
  REES_STATUS_OVERFLOW = 5,
  /**
   * Two independent computations disagreed.
   */
  REES_STATUS_INCONSISTENT = 6,
  REES_STATUS_PANIC = 7,
} ReesStatus;

/**
 * Normality test selector.
 */
typedef enum ReesMethod {
  REES_METHOD_HILBERT = 0,
  REES_METHOD_POWERS = 1,
  REES_METHOD_BOTH = 2,
} ReesMethod;

/**
 * Opaque set of search limits; pass NULL wherever a default budget will do.
 */
typedef struct ReesBudget ReesBudget;

/**
 * Opaque simple graph or multigraph.
 */
typedef struct ReesGraph ReesGraph;

/**
 * Opaque monomial ideal.
 */
typedef struct ReesIdeal ReesIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *rees_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *rees_version(void);

/**
 * Budget with explicit limits on lattice points, induced cycles and
 * codewords/subcodes.
 */
struct ReesBudget *rees_budget_new(uint64_t points, uint64_t cycles, uint64_t subspaces);

/**
 * # Safety
 * `b` is NULL or a handle from `rees_budget_new` not yet freed.
 */
void rees_budget_free(struct ReesBudget *b);

/**
 * Ideal generated by `ngens` monomials in `nvars` variables; `exponents`
 * holds them row by row (`ngens * nvars` entries). Redundant generators
 * are discarded.
 *
 * # Safety
 * `exponents` points to `ngens * nvars` readable values; `out` is writable.
 */
enum ReesStatus rees_ideal_new(size_t nvars,
                               size_t ngens,
                               const uint32_t *exponents,
                               struct ReesIdeal **out);

/**
 * Parses the text format: one generator per line as exponents.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum ReesStatus rees_ideal_parse(const char *text, struct ReesIdeal **out);

/**
 * # Safety
 * `i` is NULL or a live ideal handle.
 */
void rees_ideal_free(struct ReesIdeal *i);

/**
 * Number of variables, or 0 for NULL.
 *
 * # Safety
 * `i` is NULL or a live ideal handle.
 */
size_t rees_ideal_num_vars(const struct ReesIdeal *i);

/**
 * Number of minimal generators, or 0 for NULL.
 *
 * # Safety
 * `i` is NULL or a live ideal handle.
 */
size_t rees_ideal_num_generators(const struct ReesIdeal *i);

/**
 * Copies the exponents of generator `k` (canonical order) into `out`,
 * which must hold `rees_ideal_num_vars` entries.
 *
 * # Safety
 * `i` is a live handle; `out` has room for `nvars` values.
 */
enum ReesStatus rees_ideal_generator(const struct ReesIdeal *i, size_t k, uint32_t *out);

/**
 * Whether the ideal is normal (all powers integrally closed).
 *
 * # Safety
 * Handles are live or (for `budget`) NULL; `out` is writable.
 */
enum ReesStatus rees_ideal_is_normal(const struct ReesIdeal *i,
                                     enum ReesMethod method,
                                     const struct ReesBudget *budget,
                                     bool *out);

/**
 * Multiplicity e(I) of a zero-dimensional ideal.
 *
 * # Safety
 * Handles are live or (for `budget`) NULL; `out` is writable.
 */
enum ReesStatus rees_ideal_multiplicity(const struct ReesIdeal *i,
                                        const struct ReesBudget *budget,
                                        uint64_t *out);

/**
 * ρ_ic(I) = numerator / denominator for a squarefree ideal.
 *
 * # Safety
 * Handles are live or (for `budget`) NULL; outputs are writable.
 */
enum ReesStatus rees_ideal_ic_resurgence(const struct ReesIdeal *i,
                                         const struct ReesBudget *budget,
                                         uint64_t *numerator,
                                         uint64_t *denominator);

/**
 * The n-th symbolic power of a squarefree ideal, as a new handle.
 *
 * # Safety
 * Handles are live or (for `budget`) NULL; `out` is writable.
 */
enum ReesStatus rees_ideal_symbolic_power(const struct ReesIdeal *i,
                                          uint32_t n,
                                          const struct ReesBudget *budget,
                                          struct ReesIdeal **out);

/**
 * Least n with I^(n) ⊆ I^r.
 *
 * # Safety
 * Handles are live or (for `budget`) NULL; `out` is writable.
 */
enum ReesStatus rees_ideal_containment(const struct ReesIdeal *i,
                                       uint32_t r,
                                       const struct ReesBudget *budget,
                                       uint32_t *out);

/**
 * v-number through monomial witnesses of degree at most `cap`.
 *
 * # Safety
 * Handles are live or (for `budget`) NULL; `out` is writable.
 */
enum ReesStatus rees_ideal_v_number(const struct ReesIdeal *i,
                                    uint32_t cap,
                                    const struct ReesBudget *budget,
                                    uint32_t *out);

/**
 * Graph on `nvars` vertices with `nedges` edges given as 0-based pairs in
 * `ends` (`2 * nedges` entries). Loops need `multigraph`.
 *
 * # Safety
 * `ends` points to `2 * nedges` readable values; `out` is writable.
 */
enum ReesStatus rees_graph_new(size_t nvars,
                               size_t nedges,
                               const uint32_t *ends,
                               bool multigraph,
                               struct ReesGraph **out);

/**
 * # Safety
 * `g` is NULL or a live graph handle.
 */
void rees_graph_free(struct ReesGraph *g);

/**
 * Whether the edge ideal is normal (no two induced odd cycles at distance
 * at least two).
 *
 * # Safety
 * Handles are live or (for `budget`) NULL; `out` is writable.
 */
enum ReesStatus rees_graph_edge_ideal_normal(const struct ReesGraph *g,
                                             const struct ReesBudget *budget,
                                             bool *out);

/**
 * Whether the edge subring of a connected graph is normal.
 *
 * # Safety
 * Handles are live or (for `budget`) NULL; `out` is writable.
 */
enum ReesStatus rees_graph_edge_subring_normal(const struct ReesGraph *g,
                                               const struct ReesBudget *budget,
                                               bool *out);

/**
 * W₂ membership of a graph without isolated vertices.
 *
 * # Safety
 * Handles are live or (for `budget`) NULL; `out` is writable.
 */
enum ReesStatus rees_graph_is_w2(const struct ReesGraph *g,
                                 const struct ReesBudget *budget,
                                 bool *out);

/**
 * Edge ideal of the graph as a new ideal handle.
 *
 * # Safety
 * `g` is live; `out` is writable.
 */
enum ReesStatus rees_graph_edge_ideal(const struct ReesGraph *g, struct ReesIdeal **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REES_H */
