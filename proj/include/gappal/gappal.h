/*
 * C interface to the gapped palindromic decomposition library.
 *
 * All objects are opaque handles created by *_create functions and released
 * with the matching *_destroy. Every fallible call returns a gappal_status;
 * on failure gappal_last_error() describes the problem for the calling
 * thread. Positions are 1-based and inclusive. Handles are immutable after
 * creation and may be shared between threads for reading.
 */
#ifndef GAPPAL_GAPPAL_H
#define GAPPAL_GAPPAL_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(GAPPAL_BUILDING_LIBRARY)
#define GAPPAL_API __declspec(dllexport)
#else
#define GAPPAL_API __declspec(dllimport)
#endif
#else
#define GAPPAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gappal_status {
  GAPPAL_OK = 0,
  /* No decomposition satisfies the constraints. */
  GAPPAL_INFEASIBLE = 1,
  GAPPAL_ERR_INVALID_ARGUMENT = 2,
  GAPPAL_ERR_INVOLUTION = 3,
  GAPPAL_ERR_OUT_OF_RANGE = 4,
  GAPPAL_ERR_NO_MEMORY = 5,
  GAPPAL_ERR_INTERNAL = 6
} gappal_status;

typedef enum gappal_involution_kind {
  GAPPAL_INVOLUTION_IDENTITY = 0,
  GAPPAL_INVOLUTION_DNA = 1
} gappal_involution_kind;

typedef enum gappal_metric {
  GAPPAL_METRIC_EXACT = 0,
  GAPPAL_METRIC_HAMMING = 1,
  GAPPAL_METRIC_EDIT = 2
} gappal_metric;

typedef enum gappal_segment_kind {
  GAPPAL_SEGMENT_PALINDROME = 0,
  GAPPAL_SEGMENT_GAP = 1
} gappal_segment_kind;

typedef struct gappal_extent {
  size_t start;
  size_t end; /* start = end + 1 encodes an empty extent */
  size_t errors_used;
} gappal_extent;

typedef struct gappal_segment {
  size_t start;
  size_t end;
  gappal_segment_kind kind;
  size_t errors_used;
} gappal_segment;

typedef struct gappal_factor {
  size_t start;
  size_t end;
  size_t errors_used;
} gappal_factor;

typedef struct gappal_involution gappal_involution;
typedef struct gappal_text gappal_text;
typedef struct gappal_table gappal_table;
typedef struct gappal_decomposition gappal_decomposition;

/* Message for the last failed call on this thread ("" if none). */
GAPPAL_API const char* gappal_last_error(void);
GAPPAL_API const char* gappal_status_name(gappal_status status);

/* ---- involutions ---- */

GAPPAL_API gappal_status gappal_involution_create(gappal_involution_kind kind,
                                                  gappal_involution** out);
/* `from[i]` maps to `to[i]`; letters only listed on the right map back. */
GAPPAL_API gappal_status gappal_involution_create_custom(const char* from, const char* to,
                                                         size_t pair_count,
                                                         gappal_involution** out);
GAPPAL_API void gappal_involution_destroy(gappal_involution* f);
/* Writes f(letter) to *out; GAPPAL_ERR_INVOLUTION if undefined. */
GAPPAL_API gappal_status gappal_involution_apply(const gappal_involution* f, char letter,
                                                 char* out);

/* ---- texts ---- */

/* Copies `letters` and `f`. Fails with GAPPAL_ERR_INVOLUTION when f is not
 * defined on some letter. An empty text is allowed. */
GAPPAL_API gappal_status gappal_text_create(const char* letters, size_t length,
                                            const gappal_involution* f, gappal_text** out);
GAPPAL_API void gappal_text_destroy(gappal_text* text);
GAPPAL_API size_t gappal_text_length(const gappal_text* text);

/* Longest k with f(S[i-k+1..i]^R) = S[j..j+k-1]; 0 <= i <= n, 1 <= j <= n+1. */
GAPPAL_API gappal_status gappal_text_lgpal(const gappal_text* text, size_t i, size_t j,
                                           size_t* out);

/* ---- maximal palindrome tables ---- */

GAPPAL_API gappal_status gappal_table_create(const gappal_text* text, gappal_metric metric,
                                             size_t delta, gappal_table** out);
GAPPAL_API void gappal_table_destroy(gappal_table* table);
/* Center c is passed as twice_center = 2c, in [2..2n]. *present is set to 0
 * when no d-palindrome exists at that center. */
GAPPAL_API gappal_status gappal_table_get(const gappal_table* table, size_t d,
                                          size_t twice_center, gappal_extent* out,
                                          int* present);

/* ---- decompositions ---- */

/* GAPPAL_INFEASIBLE leaves *out NULL. */
GAPPAL_API gappal_status gappal_decompose_exact(const gappal_text* text, size_t max_gaps,
                                                size_t min_length, gappal_decomposition** out);
GAPPAL_API gappal_status gappal_decompose_maximal(const gappal_text* text, gappal_metric metric,
                                                  size_t max_gaps, size_t min_length,
                                                  size_t delta, gappal_decomposition** out);
GAPPAL_API gappal_status gappal_factorize(size_t n, const gappal_factor* factors,
                                          size_t factor_count, size_t max_gaps,
                                          gappal_decomposition** out);
GAPPAL_API void gappal_decomposition_destroy(gappal_decomposition* decomposition);

GAPPAL_API size_t gappal_decomposition_segment_count(const gappal_decomposition* decomposition);
GAPPAL_API gappal_status gappal_decomposition_segment(const gappal_decomposition* decomposition,
                                                      size_t index, gappal_segment* out);
GAPPAL_API size_t gappal_decomposition_total_gap_length(
    const gappal_decomposition* decomposition);
GAPPAL_API size_t gappal_decomposition_gap_count(const gappal_decomposition* decomposition);

/* Re-checks tiling, limits and every palindrome against its metric. Returns
 * GAPPAL_OK when valid, GAPPAL_ERR_INVALID_ARGUMENT (with a message) if not. */
GAPPAL_API gappal_status gappal_decomposition_validate(const gappal_decomposition* decomposition,
                                                       const gappal_text* text,
                                                       gappal_metric metric, size_t max_gaps,
                                                       size_t min_length, size_t delta);

#ifdef __cplusplus
}
#endif

#endif /* GAPPAL_GAPPAL_H */
