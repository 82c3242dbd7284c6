/*
 * mpex: extremal numbers ex(K_{n_1,...,n_r}, kK_t) for complete multipartite
 * hosts. C interface to the shared library.
 *
 * Conventions:
 *  - Every fallible call returns an mpex_status; MPEX_OK is zero.
 *  - On failure, mpex_last_error() describes the problem. The message is
 *    thread-local and valid until the next mpex call on the same thread.
 *  - Part sizes are passed as (pointer, count) and may be in any order; the
 *    library sorts them ascending. Partition witnesses index that sorted
 *    order.
 *  - Strings returned through char** are heap-allocated and must be
 *    released with mpex_string_free. Graph handles are released with
 *    mpex_graph_free.
 */
#ifndef MPEX_MPEX_H
#define MPEX_MPEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MPEX_BUILDING_LIBRARY)
#    define MPEX_API __declspec(dllexport)
#  else
#    define MPEX_API __declspec(dllimport)
#  endif
#else
#  define MPEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mpex_status {
  MPEX_OK = 0,
  MPEX_ERR_INVALID_ARGUMENT = 1,
  MPEX_ERR_INVALID_ARITY = 2,
  MPEX_ERR_INVALID_SIZE = 3,
  MPEX_ERR_OUT_OF_RANGE = 4,
  MPEX_ERR_NOT_AN_EDGE = 5,
  MPEX_ERR_BUDGET_EXCEEDED = 6,
  MPEX_ERR_OVERFLOW = 7,
  MPEX_ERR_PARSE = 8,
  MPEX_ERR_IO = 9,
  MPEX_ERR_INTERNAL = 10
} mpex_status;

typedef enum mpex_formula_id {
  MPEX_FORMULA_THM11 = 0,  /* ex(K_{n_1..n_r}, K_t) = f_t(n_1..n_r)            */
  MPEX_FORMULA_THM12 = 1,  /* ex(K_{n_1..n_r}, kK_r)                            */
  MPEX_FORMULA_THM13 = 2,  /* ex(K_{n_1..n_4}, kK_3), sufficiently large sizes  */
  MPEX_FORMULA_THM16 = 3,  /* ex(K_{n_1..n_r}, kK_3), r >= 4, n_1 + 4k <= n_2   */
  MPEX_FORMULA_CONJ15 = 4, /* partition-maximum conjectured value               */
  MPEX_FORMULA_CONJ16 = 5, /* (k-1)(n-n_1) + f_t(n_1-(k-1), n_2, ..., n_r)      */
  MPEX_FORMULA_KK2 = 6,    /* ex(K_{n_1..n_r}, kK_2) = (k-1)(n - n_1)           */
  MPEX_FORMULA_ERDOS = 7   /* ex(K_n, kK_3); host must be K_{1,...,1}           */
} mpex_formula_id;

typedef struct mpex_formula_value {
  int64_t value;
  mpex_formula_id id;
  int32_t in_proved_range;
  char range_note[256];
} mpex_formula_value;

typedef struct mpex_oracle_result {
  int64_t host_edges;
  int32_t exact;       /* 0 when the budget ran out */
  int64_t value;       /* meaningful only when exact */
  int64_t value_lower;
  int64_t value_upper;
  uint64_t nodes_explored;
} mpex_oracle_result;

typedef struct mpex_sweep_summary {
  uint64_t instances;
  uint64_t proved_mismatches;
  uint64_t potential_counterexamples;
  uint64_t inconclusive;
} mpex_sweep_summary;

typedef struct mpex_graph mpex_graph;

/* Return nonzero to continue, zero to stop. */
typedef int (*mpex_clique_callback)(const int32_t* vertices, size_t t, void* user);
typedef void (*mpex_line_callback)(const char* line, void* user);

MPEX_API const char* mpex_version(void);
MPEX_API const char* mpex_status_name(mpex_status status);
MPEX_API const char* mpex_last_error(void);
MPEX_API void mpex_string_free(char* s);

/* ---- partition function f_t ------------------------------------------- */

/* f_t by exhaustive enumeration (t = 3 uses the subset-sum route).
 * block_of, if non-null, receives r block labels (0-based) for the
 * canonical maximizing partition; all zero when t = 2. */
MPEX_API mpex_status mpex_ft(const int64_t* sizes, size_t r, int32_t t, int64_t* value,
                             int32_t* block_of);
MPEX_API mpex_status mpex_ft_exhaustive(const int64_t* sizes, size_t r, int32_t t,
                                        int64_t* value, int32_t* block_of);
MPEX_API mpex_status mpex_f3_fast(const int64_t* sizes, size_t r, int64_t* value,
                                  int32_t* block_of);
MPEX_API mpex_status mpex_f_closed_equal_r(const int64_t* sizes, size_t r, int64_t* value);

/* ---- closed-form extremal numbers -------------------------------------- */

MPEX_API mpex_status mpex_formula(mpex_formula_id id, const int64_t* sizes, size_t r,
                                  int32_t t, int32_t k, mpex_formula_value* out);
MPEX_API mpex_status mpex_formula_from_tag(const char* tag, mpex_formula_id* out);
MPEX_API const char* mpex_formula_tag(mpex_formula_id id);
MPEX_API mpex_status mpex_ex_kK3_complete(int64_t n, int32_t k, mpex_formula_value* out);

/* ---- graphs ------------------------------------------------------------ */

MPEX_API mpex_status mpex_graph_complete(const int64_t* sizes, size_t r, mpex_graph** out);
MPEX_API mpex_status mpex_graph_lower_bound(const int64_t* sizes, size_t r, int32_t t,
                                            int32_t k, mpex_graph** out);
MPEX_API mpex_status mpex_graph_erdos(int64_t n, int32_t k, mpex_graph** out);
MPEX_API mpex_status mpex_graph_parse(const char* text, size_t length, mpex_graph** out);
MPEX_API mpex_status mpex_graph_read_file(const char* path, mpex_graph** out);
MPEX_API mpex_status mpex_graph_write_file(const mpex_graph* g, const char* path);
MPEX_API mpex_status mpex_graph_to_text(const mpex_graph* g, char** out);
MPEX_API void mpex_graph_free(mpex_graph* g);

MPEX_API size_t mpex_graph_vertex_count(const mpex_graph* g);
MPEX_API size_t mpex_graph_edge_count(const mpex_graph* g);
MPEX_API size_t mpex_graph_part_count(const mpex_graph* g);
MPEX_API int32_t mpex_graph_adjacent(const mpex_graph* g, int32_t u, int32_t v);

/* pairs holds 2 * count vertex ids. */
MPEX_API mpex_status mpex_graph_remove_edges(const mpex_graph* g, const int32_t* pairs,
                                             size_t count, mpex_graph** out);

MPEX_API mpex_status mpex_graph_for_each_clique(const mpex_graph* g, int32_t t,
                                                mpex_clique_callback callback, void* user);
/* found is set to 1 and vertices (k * t entries, nullable) filled when g
 * contains kK_t; found is 0 otherwise. */
MPEX_API mpex_status mpex_graph_find_packing(const mpex_graph* g, int32_t t, int32_t k,
                                             int32_t* found, int32_t* vertices);
MPEX_API mpex_status mpex_graph_max_packing(const mpex_graph* g, int32_t t, int32_t* out);

/* ---- oracle ------------------------------------------------------------ */

/* Returns MPEX_ERR_BUDGET_EXCEEDED with out filled (exact = 0) when the
 * node or time budget runs out. budget_nodes = 0 or budget_secs <= 0 select
 * the defaults (10^7 nodes, 60 s). */
MPEX_API mpex_status mpex_oracle(const int64_t* sizes, size_t r, int32_t t, int32_t k,
                                 uint64_t budget_nodes, double budget_secs,
                                 mpex_oracle_result* out);

/* ---- JSON reports (schema in docs/report_schema.json) ------------------ */

MPEX_API mpex_status mpex_ft_json(const int64_t* sizes, size_t r, int32_t t,
                                  int32_t with_witness, char** out);
/* tag may be null for "all formulas". */
MPEX_API mpex_status mpex_formula_json(const int64_t* sizes, size_t r, int32_t t, int32_t k,
                                       const char* tag, char** out);
/* Builds and certifies the lower-bound graph; writes the edge list to
 * out_path when non-null. */
MPEX_API mpex_status mpex_construct_json(const int64_t* sizes, size_t r, int32_t t,
                                         int32_t k, const char* out_path, char** out);
MPEX_API mpex_status mpex_certify_json(const mpex_graph* g, int32_t t, int32_t k,
                                       int64_t claimed_edges, char** out);
MPEX_API mpex_status mpex_check_free_json(const char* path, int32_t t, int32_t k, char** out);
/* Budget exhaustion still yields a report (and MPEX_ERR_BUDGET_EXCEEDED). */
MPEX_API mpex_status mpex_oracle_json(const int64_t* sizes, size_t r, int32_t t, int32_t k,
                                      uint64_t budget_nodes, double budget_secs, char** out);
MPEX_API mpex_status mpex_verify_json(const int64_t* sizes, size_t r, int32_t t, int32_t k,
                                      uint64_t budget_nodes, double budget_secs, char** out);
MPEX_API mpex_status mpex_sweep(int32_t r, int32_t t, int32_t k_max, int64_t size_max,
                                int32_t with_oracle, uint64_t budget_nodes, double budget_secs,
                                mpex_line_callback emit, void* user, mpex_sweep_summary* out);
/* which is "2.1", "2.2" or "2.3". */
MPEX_API mpex_status mpex_props_json(const char* which, int64_t size_max, int32_t r_max,
                                     int32_t k_max, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MPEX_MPEX_H */
