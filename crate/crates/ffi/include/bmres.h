#ifndef BMRES_H
#define BMRES_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum BmStatus {
  BM_STATUS_OK = 0,
  BM_STATUS_NULL_POINTER = 1,
  BM_STATUS_INVALID_UTF8 = 2,
  BM_STATUS_PARSE = 3,
  BM_STATUS_INVALID_INPUT = 4,
  BM_STATUS_TOO_LARGE = 5,
  BM_STATUS_NOT_A_TREE = 6,
  BM_STATUS_NOT_PRIME = 7,
  BM_STATUS_PANIC = 8,
} BmStatus;

typedef struct BmBettiTable BmBettiTable;

typedef struct BmGraph BmGraph;

typedef struct BmIdeal BmIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Owned by the
 * library; valid until the next call.
 */
const char *bm_last_error(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void bm_string_free(char *s);

/**
 * Graph from `{"n": .., "edges": [[i, j], ..]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BmStatus bm_graph_from_json(const char *json, struct BmGraph **out);

/**
 * Graph on `n` vertices from `edge_count` pairs stored flat in `edges`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` values; `out` must be valid.
 */
enum BmStatus bm_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct BmGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be freed twice.
 */
void bm_graph_free(struct BmGraph *g);

/**
 * Closed neighborhood ideal of a graph.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum BmStatus bm_ideal_from_graph(const struct BmGraph *g, struct BmIdeal **out);

/**
 * Ideal from `{"numvars": n, "generators": [[e1, ..], ..]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BmStatus bm_ideal_from_json(const char *json, struct BmIdeal **out);

/**
 * Number of minimal generators; 0 for a null handle.
 *
 * # Safety
 * `i` must be null or a live handle.
 */
size_t bm_ideal_generator_count(const struct BmIdeal *i);

/**
 * # Safety
 * `i` must come from this library and not be freed twice.
 */
void bm_ideal_free(struct BmIdeal *i);

/**
 * Whether the order listing generator indices largest first is
 * bridge-friendly.
 *
 * # Safety
 * `perm` must point to `len` values; `i` and `out` must be valid.
 */
enum BmStatus bm_is_bridge_friendly(const struct BmIdeal *i,
                                    const size_t *perm,
                                    size_t len,
                                    bool *out);

/**
 * Quotient Betti table of NI(T) from critical sets under the tree-lex
 * order with the given root.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum BmStatus bm_betti_tree(const struct BmGraph *t, size_t root, struct BmBettiTable **out);

/**
 * Quotient Betti table over F_p from Taylor-strand homology.
 *
 * # Safety
 * `i` must be a live handle and `out` a valid pointer.
 */
enum BmStatus bm_betti_homology(const struct BmIdeal *i, uint64_t p, struct BmBettiTable **out);

/**
 * `β_{i,j}`; 0 for a null handle.
 *
 * # Safety
 * `b` must be null or a live handle.
 */
uint64_t bm_betti_get(const struct BmBettiTable *b, size_t i, size_t j);

/**
 * Projective dimension of the table (largest nonzero row index).
 *
 * # Safety
 * `b` must be a live handle and `out` a valid pointer.
 */
enum BmStatus bm_betti_pdim(const struct BmBettiTable *b, size_t *out);

/**
 * Table as JSON; free with `bm_string_free`. NULL on a null handle.
 *
 * # Safety
 * `b` must be null or a live handle.
 */
char *bm_betti_to_json(const struct BmBettiTable *b);

/**
 * # Safety
 * `b` must come from this library and not be freed twice.
 */
void bm_betti_free(struct BmBettiTable *b);

/**
 * `pdim(R/NI(T))`, which equals the independence number of the tree.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum BmStatus bm_tree_pdim(const struct BmGraph *t, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BMRES_H */
