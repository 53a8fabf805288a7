/*
 * rbclab - a laboratory for robust batch codes over small finite fields.
 *
 * C interface to the verifier, the reference constructions, the block
 * length lower bound, the shrinking reduction, and the existence search.
 * All objects are opaque handles created and destroyed through this API;
 * every fallible call returns an rbclab_status and leaves a thread-local
 * message retrievable with rbclab_last_error().
 *
 * Conventions:
 *   - Field elements are canonical integer encodings in [0, q).
 *   - Rows, columns, and all index sets (I, D, J) are 1-based, matching
 *     the text formats and rendered reports.
 *   - Strings returned through char** out-parameters are heap-allocated;
 *     release them with rbclab_string_free().
 */

#ifndef RBCLAB_H
#define RBCLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rbclab_status {
  RBCLAB_OK = 0,
  RBCLAB_E_INVALID = 1,  /* bad argument or violated precondition */
  RBCLAB_E_PARSE = 2,    /* malformed matrix text */
  RBCLAB_E_BUDGET = 3,   /* enumeration budget exceeded */
  RBCLAB_E_IO = 4,       /* file could not be read or written */
  RBCLAB_E_INTERNAL = 5
} rbclab_status;

const char *rbclab_status_name(rbclab_status s);

/* Message for the most recent failing call in this thread; valid until the
 * next failing call. Never NULL. */
const char *rbclab_last_error(void);

void rbclab_string_free(char *s);

/* ---------------- fields ---------------- */

typedef struct rbclab_field rbclab_field;

/* GF(p^e). For e > 1, poly points at the e+1 reduction polynomial
 * coefficients in descending order c_e ... c_0; pass NULL (poly_len 0) for
 * the library default. */
rbclab_status rbclab_field_new(int p, int e, const int *poly, int poly_len,
                               rbclab_field **out);

/* GF(q) for a prime power q <= 256, with the default reduction polynomial. */
rbclab_status rbclab_field_from_order(int q, rbclab_field **out);

void rbclab_field_free(rbclab_field *f);

int rbclab_field_order(const rbclab_field *f);
int rbclab_field_characteristic(const rbclab_field *f);
int rbclab_field_degree(const rbclab_field *f);

rbclab_status rbclab_field_add(const rbclab_field *f, int a, int b, int *out);
rbclab_status rbclab_field_sub(const rbclab_field *f, int a, int b, int *out);
rbclab_status rbclab_field_mul(const rbclab_field *f, int a, int b, int *out);
rbclab_status rbclab_field_neg(const rbclab_field *f, int a, int *out);
/* Fails with RBCLAB_E_INVALID when a == 0. */
rbclab_status rbclab_field_inv(const rbclab_field *f, int a, int *out);

/* ---------------- linear codes ---------------- */

typedef struct rbclab_code rbclab_code;

/* entries: k*n canonical encodings in row-major order. */
rbclab_status rbclab_code_new(const rbclab_field *f, int k, int n,
                              const int *entries, rbclab_code **out);

/* Matrix text format (also used by the CLI):
 *   q k n
 *   poly c_e ... c_0     (extension fields; optional, default when absent)
 *   k rows of n entries
 * '#' starts a comment; whitespace is free-form. */
rbclab_status rbclab_code_parse(const char *text, rbclab_code **out);
rbclab_status rbclab_code_read(const char *path, rbclab_code **out);
rbclab_status rbclab_code_format(const rbclab_code *c, char **out);
rbclab_status rbclab_code_write(const rbclab_code *c, const char *path);

void rbclab_code_free(rbclab_code *c);

int rbclab_code_k(const rbclab_code *c);
int rbclab_code_n(const rbclab_code *c);
int rbclab_code_field_order(const rbclab_code *c);

/* row in [1, k], col in [1, n]. */
rbclab_status rbclab_code_entry(const rbclab_code *c, int row, int col,
                                int *out);

/* x: k encodings; out: n encodings (the codeword x G). */
rbclab_status rbclab_encode(const rbclab_code *c, const int *x, int *out);

rbclab_status rbclab_code_rank(const rbclab_code *c, int *out);

/* Minimum weight of x G over nonzero x by exhaustive enumeration; equals
 * the minimum distance when the generator has full row rank. budget 0
 * means the default (2^24 messages). */
rbclab_status rbclab_code_min_distance(const rbclab_code *c, uint64_t budget,
                                       int *out);

/* *out = 1 iff every k x k column submatrix is invertible. */
rbclab_status rbclab_code_is_mds(const rbclab_code *c, uint64_t budget,
                                 int *out);

/* Reference constructions; see the CLI `construct` subcommand. */
rbclab_status rbclab_construct_repetition(const rbclab_field *f, int k, int d,
                                          rbclab_code **out);
rbclab_status rbclab_construct_mds(const rbclab_field *f, int k, int d,
                                   rbclab_code **out);
rbclab_status rbclab_construct_block_rs(const rbclab_field *f, int k, int d,
                                        int lambda, rbclab_code **out);

/* ---------------- recovery verification ---------------- */

typedef enum rbclab_strategy {
  RBCLAB_STRATEGY_NAIVE = 0,
  /* Candidate queries restricted to columns supported inside I; valid for
   * m = r only. Answers are re-validated against the naive semantics. */
  RBCLAB_STRATEGY_LEMMA1 = 1
} rbclab_strategy;

/* *out = 1 iff the codeword positions J pin down the message positions I
 * (index sets 1-based, strictly ascending). */
rbclab_status rbclab_determines(const rbclab_code *c, const int *I, int ilen,
                                const int *J, int jlen, int *out);

/* The size-matched structural test: G|_{I,J} invertible and the complement
 * rows of J all zero. Requires |I| = |J|. */
rbclab_status rbclab_lemma1_check(const rbclab_code *c, const int *I, int ilen,
                                  const int *J, int jlen, int *out);

/* Smallest repair set (minimal size, then lexicographic) of size <= m
 * avoiding D. J_out must hold m entries; *found reports presence. */
rbclab_status rbclab_find_repair_set(const rbclab_code *c, const int *I,
                                     int ilen, const int *D, int dlen, int m,
                                     rbclab_strategy strategy, int *J_out,
                                     int *jlen, int *found);

typedef struct rbclab_verify_options {
  rbclab_strategy strategy;
  int collect_witnesses; /* include per-(I,D) repair sets in the report */
  int threads;           /* <= 1 for sequential; output never depends on it */
  uint64_t pair_budget;  /* cap on C(k,r)*C(n,d); 0 means default (2^24) */
} rbclab_verify_options;

typedef struct rbclab_verdict rbclab_verdict;

/* Checks every request set I of size r against every erasure set D of size
 * d. opts may be NULL for defaults. */
rbclab_status rbclab_verify(const rbclab_code *c, int r, int m, int d,
                            const rbclab_verify_options *opts,
                            rbclab_verdict **out);

int rbclab_verdict_holds(const rbclab_verdict *v);

/* First failing pair in lexicographic order. I_out/D_out must hold k and n
 * entries respectively; *present is 0 when the property holds. */
rbclab_status rbclab_verdict_counterexample(const rbclab_verdict *v,
                                            int *I_out, int *ilen, int *D_out,
                                            int *dlen, int *present);

rbclab_status rbclab_verdict_stats(const rbclab_verdict *v, uint64_t *pairs,
                                   uint64_t *candidates);

/* JSON report with stable field order and 1-based sets. */
rbclab_status rbclab_verdict_render(const rbclab_verdict *v, char **out);

void rbclab_verdict_free(rbclab_verdict *v);

/* ---------------- block length lower bound ---------------- */

typedef struct rbclab_bound_result {
  long long num, den;        /* exact lower bound on n, den in {1, 2} */
  long long lower_bound_int; /* ceiling */
  int repetition_optimal;    /* 1 when the bound equals k(d+1) */
  double threshold_r;        /* conservative flat-regime boundary on r */
} rbclab_bound_result;

rbclab_status rbclab_theorem_bound(long long k, long long r, long long d,
                                   rbclab_bound_result *out);

rbclab_status rbclab_repetition_threshold(long long k, long long d,
                                          double *out);

/* CSV "d,r,rate_upper_bound" over r = 1..k for each listed d; byte-stable
 * across platforms. */
rbclab_status rbclab_figure_csv(long long k, const long long *d_list,
                                int d_count, char **out);

/* ---------------- shrinking reduction ---------------- */

/* One reduction step at parameters (r, r, d): removes one message row and
 * the columns reading it, pads to length n - (d+1) - (k-r). Either of
 * reduced/log may be NULL. */
rbclab_status rbclab_shrink_once(const rbclab_code *c, int r, int d,
                                 rbclab_code **reduced, char **log);

/* Applies the step k - r times and reports the n sequence plus the final
 * length check n >= r + d; with verify_each nonzero, every intermediate
 * code is verified and a failure aborts the chain. */
rbclab_status rbclab_shrink_chain(const rbclab_code *c, int r, int d,
                                  int verify_each, rbclab_code **final_code,
                                  char **log);

/* ---------------- existence search ---------------- */

typedef enum rbclab_search_status {
  RBCLAB_SEARCH_FOUND = 0,
  RBCLAB_SEARCH_EXHAUSTED_NONE = 1,
  RBCLAB_SEARCH_INCONCLUSIVE = 2
} rbclab_search_status;

typedef enum rbclab_search_mode {
  RBCLAB_SEARCH_EXHAUSTIVE = 0,
  RBCLAB_SEARCH_RANDOM = 1
} rbclab_search_mode;

typedef struct rbclab_search_options {
  rbclab_search_mode mode;
  uint64_t seed;    /* random mode; always explicit, never time-based */
  uint64_t samples; /* random mode */
  uint64_t budget;  /* cap on candidate matrices; 0 means default (2^28) */
  int threads;
  /* Optional append-only result cache. Lines are keyed by
   * (q,k,n,r,m,d,mode,seed,samples); witness entries assume the default
   * reduction polynomial. NULL disables caching. */
  const char *cache_path;
} rbclab_search_options;

typedef struct rbclab_search_result rbclab_search_result;

/* Exhaustive mode enumerates generator matrices up to column permutation
 * and per-column scaling (limited to q <= 4, k*n <= 36) and only reports
 * EXHAUSTED_NONE for a completed enumeration over the named field; an
 * exceeded budget yields INCONCLUSIVE. opts may be NULL (exhaustive,
 * defaults). */
rbclab_status rbclab_search_exists(const rbclab_field *f, int k, int n, int r,
                                   int m, int d,
                                   const rbclab_search_options *opts,
                                   rbclab_search_result **out);

rbclab_search_status rbclab_search_result_status(const rbclab_search_result *s);

/* Fails with RBCLAB_E_INVALID when there is no witness. */
rbclab_status rbclab_search_result_witness(const rbclab_search_result *s,
                                           rbclab_code **out);

rbclab_status rbclab_search_result_counters(const rbclab_search_result *s,
                                            uint64_t *enumerated,
                                            uint64_t *after_pruning);

rbclab_status rbclab_search_result_render(const rbclab_search_result *s,
                                          char **out);

void rbclab_search_result_free(rbclab_search_result *s);

/* Smallest n <= n_max admitting a code, scanning upward; every negative
 * step must be a completed enumeration, otherwise the call fails with
 * RBCLAB_E_BUDGET. *found is 0 when nothing exists up to n_max. */
rbclab_status rbclab_min_blocklength(const rbclab_field *f, int k, int r,
                                     int m, int d, int n_max,
                                     const rbclab_search_options *opts,
                                     int *found, int *n_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RBCLAB_H */
