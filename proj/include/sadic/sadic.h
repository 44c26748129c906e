#ifndef SADIC_SADIC_H
#define SADIC_SADIC_H

/* C interface to libsadic. All objects are opaque handles released with the
 * matching *_free function. Functions return a sadic_status; on any error the
 * message is available from sadic_last_error() on the calling thread.
 * Report functions allocate their output, release it with sadic_string_free.
 * They return SADIC_CHECK_FAILED, with the report still written, when a
 * checked bound does not hold. */

#include <stddef.h>
#include <stdint.h>

#if defined(SADIC_BUILDING_LIBRARY)
#define SADIC_API __attribute__((visibility("default")))
#else
#define SADIC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sadic_status {
  SADIC_OK = 0,
  SADIC_CHECK_FAILED = 1,
  SADIC_ERR_INVALID_ARGUMENT = 2,
  SADIC_ERR_ALPHABET_MISMATCH = 3,
  SADIC_ERR_OUT_OF_WINDOW = 4,
  SADIC_ERR_NOT_CONVERGED = 5,
  SADIC_ERR_INSUFFICIENT_WINDOW = 6,
  SADIC_ERR_FACTORIZATION = 7,
  SADIC_ERR_PARSE = 8,
  SADIC_ERR_IO = 9,
  SADIC_ERR_INTERNAL = 10
} sadic_status;

typedef enum sadic_format { SADIC_FORMAT_TEXT = 0, SADIC_FORMAT_JSONL = 1 } sadic_format;

typedef struct sadic_word sadic_word;
typedef struct sadic_window sadic_window;
typedef struct sadic_morphism sadic_morphism;
typedef struct sadic_directive sadic_directive;
typedef struct sadic_return_table sadic_return_table;
typedef struct sadic_tower sadic_tower;

SADIC_API const char* sadic_version(void);
SADIC_API const char* sadic_last_error(void);
SADIC_API const char* sadic_status_name(sadic_status status);
SADIC_API void sadic_string_free(char* s);
/* Worker threads used by parallel scans; 0 or 1 means serial. */
SADIC_API void sadic_set_threads(unsigned threads);

/* Words. The alphabet is inferred from the text by first appearance. */
SADIC_API sadic_status sadic_word_parse(const char* text, sadic_word** out);
SADIC_API sadic_status sadic_word_load(const char* path, sadic_word** out);
SADIC_API void sadic_word_free(sadic_word* w);
SADIC_API size_t sadic_word_length(const sadic_word* w);
SADIC_API sadic_status sadic_word_to_string(const sadic_word* w, char** out);
/* values must hold max_n + 1 entries; values[0] = 1. */
SADIC_API sadic_status sadic_word_complexity_profile(const sadic_word* w, size_t max_n, size_t* values);

/* Two-sided windows; symbol i of the word sits at position i - origin. */
SADIC_API sadic_status sadic_window_load(const char* path, sadic_window** out);
SADIC_API sadic_status sadic_window_from_word(const sadic_word* w, size_t origin, sadic_window** out);
SADIC_API void sadic_window_free(sadic_window* x);
SADIC_API size_t sadic_window_origin(const sadic_window* x);
SADIC_API size_t sadic_window_length(const sadic_window* x);
/* Copy of the whole window as a word. */
SADIC_API sadic_status sadic_window_word(const sadic_window* x, sadic_word** out);

/* Morphisms. */
SADIC_API sadic_status sadic_morphism_parse(const char* text, sadic_morphism** out);
SADIC_API sadic_status sadic_morphism_load(const char* path, sadic_morphism** out);
SADIC_API void sadic_morphism_free(sadic_morphism* m);
SADIC_API sadic_status sadic_morphism_to_string(const sadic_morphism* m, char** out);
SADIC_API sadic_status sadic_morphism_apply(const sadic_morphism* m, const sadic_word* w, sadic_word** out);
/* (outer o inner)(c) = outer(inner(c)). */
SADIC_API sadic_status sadic_morphism_compose(const sadic_morphism* outer, const sadic_morphism* inner,
                                              sadic_morphism** out);

/* Directives. Builtin names: counterexample, golden, sturmian-linear,
 * sturmian:A0,A1,... and sturmian-finite:A0,A1,... (continued fractions). */
SADIC_API sadic_status sadic_directive_builtin(const char* name, sadic_directive** out);
SADIC_API sadic_status sadic_directive_load(const char* path, sadic_directive** out);
SADIC_API void sadic_directive_free(sadic_directive* d);

typedef struct sadic_generate_info {
  size_t stable_length;
  size_t depth_used;
  int converged;
} sadic_generate_info;

/* First `target` symbols of lim s_level ... s_l (seed seed ...). A prefix
 * that does not stabilise within depth_budget (0 = default) is
 * SADIC_ERR_NOT_CONVERGED; info, when given, is filled either way. */
SADIC_API sadic_status sadic_directive_generate(const sadic_directive* d, size_t level, size_t target,
                                                size_t depth_budget, sadic_word** out,
                                                sadic_generate_info* info);

/* Return words to u.v. u may be empty; u and v use the window's symbols. */
SADIC_API sadic_status sadic_return_table_build(const sadic_window* x, const char* u, const char* v,
                                                sadic_return_table** out);
SADIC_API void sadic_return_table_free(sadic_return_table* t);
SADIC_API size_t sadic_return_table_size(const sadic_return_table* t);
SADIC_API int sadic_return_table_complete(const sadic_return_table* t);
/* k is 1-based. */
SADIC_API sadic_status sadic_return_table_word(const sadic_return_table* t, size_t k, char** out);
SADIC_API sadic_status sadic_return_table_encode(const sadic_return_table* t, const sadic_window* x,
                                                 int64_t from, size_t count, sadic_word** out);
SADIC_API sadic_status sadic_return_table_decode(const sadic_return_table* t, const sadic_word* code,
                                                 sadic_word** out);
/* Text format: one "k<TAB>word" line per return word. */
SADIC_API sadic_status sadic_return_table_report(const sadic_return_table* t, sadic_format format, char** out);

/* Derived tower with parameter K over levels 0..levels. */
SADIC_API sadic_status sadic_tower_build_window(const sadic_window* x, unsigned K, size_t levels,
                                                sadic_tower** out);
SADIC_API sadic_status sadic_tower_build_directive(const sadic_directive* d, unsigned K, size_t levels,
                                                   size_t max_window, sadic_tower** out);
SADIC_API void sadic_tower_free(sadic_tower* t);
SADIC_API size_t sadic_tower_levels(const sadic_tower* t);
/* lambda_n in the morphism file format; n = 0 gives theta_0. */
SADIC_API sadic_status sadic_tower_lambda(const sadic_tower* t, size_t n, char** out);
SADIC_API sadic_status sadic_tower_report(const sadic_tower* t, sadic_format format, char** out);

/* Reports. */
SADIC_API sadic_status sadic_report_prefix(const sadic_directive* d, size_t level, size_t target,
                                           size_t depth_budget, sadic_format format, char** out);
/* Complexity profile of a word; with bound != NULL ("3", "5/2") also checks
 * p(n) <= bound (Card A)^2 n. */
SADIC_API sadic_status sadic_report_word_complexity(const sadic_word* w, size_t max_n, const char* bound,
                                                    sadic_format format, char** out);
SADIC_API sadic_status sadic_report_complexity_bound(const sadic_directive* d, const char* bound,
                                                     size_t max_n, size_t window, size_t depth,
                                                     sadic_format format, char** out);
/* D_n for n = 0..n_max; with max_u_len > 0 also the return-ratio profile.
 * expect_lr: -1 no expectation, 0 expect not consistent, 1 expect consistent. */
SADIC_API sadic_status sadic_report_lr(const sadic_directive* d, size_t n_max, size_t window,
                                       size_t max_u_len, int expect_lr, sadic_format format, char** out);
SADIC_API sadic_status sadic_report_ratio_profile(const sadic_word* w, size_t max_u_len, int rows,
                                                  sadic_format format, char** out);
SADIC_API sadic_status sadic_report_not_lr(size_t n, size_t window, sadic_format format, char** out);
SADIC_API sadic_status sadic_report_gap_lemma(size_t n, size_t window, sadic_format format, char** out);
SADIC_API sadic_status sadic_report_block_identities(size_t i, size_t j, size_t k, sadic_format format,
                                                     char** out);
/* Every 1 <= i, j, k <= upto. */
SADIC_API sadic_status sadic_report_block_identities_upto(size_t upto, sadic_format format, char** out);
SADIC_API sadic_status sadic_report_sturmian_gaps(size_t i, size_t j, size_t k, const sadic_word* tail,
                                                  sadic_format format, char** out);
/* spec: golden, linear or a continued fraction A0,A1,... (last repeating).
 * ratio_limit != NULL additionally asserts the profile maximum is below it;
 * contrast != NULL asserts that spec's profile maximum is strictly above. */
SADIC_API sadic_status sadic_report_sturmian_verdict(const char* spec, size_t levels, size_t window,
                                                     size_t max_u_len, const char* ratio_limit,
                                                     const char* contrast, sadic_format format, char** out);
/* Randomized self-checks over sample windows (Sturmian, counterexample and
 * random words): distinct codes decode to distinct words, and encode/decode
 * round trips match window slices. */
SADIC_API sadic_status sadic_report_coding_check(size_t pairs, uint64_t seed, sadic_format format, char** out);
/* Return-word tables against the brute-force enumeration. */
SADIC_API sadic_status sadic_report_return_oracle(size_t instances, size_t max_window, uint64_t seed,
                                                  sadic_format format, char** out);
SADIC_API sadic_status sadic_sturmian_directive(const char* spec, sadic_directive** out);

#ifdef __cplusplus
}
#endif

#endif
