#ifndef MSEG_MSEG_H
#define MSEG_MSEG_H

/* C interface to the multisegment library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an mseg_status; on failure mseg_last_error()
 * describes the problem (per thread). Strings returned through char** are
 * heap-allocated and released with mseg_string_free. Segment indices in
 * witness keys are 1-based. */

#include <stddef.h>
#include <stdint.h>

#if defined(MSEG_BUILDING_LIBRARY)
#define MSEG_API __attribute__((visibility("default")))
#else
#define MSEG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mseg_status {
  MSEG_OK = 0,
  MSEG_ERR_NULL_ARG,
  MSEG_ERR_PARSE,
  MSEG_ERR_EMPTY_SEGMENT,
  MSEG_ERR_EMPTY_MULTISEGMENT,
  MSEG_ERR_PRECONDITION,
  MSEG_ERR_NOT_APPLICABLE,
  MSEG_ERR_INVALID_CONFIG,
  MSEG_ERR_TOO_LARGE,
  MSEG_ERR_SUPPORT_MISMATCH,
  MSEG_ERR_INVALID_MATCHING,
  MSEG_ERR_UNKNOWN_SUITE,
  MSEG_ERR_INTERNAL
} mseg_status;

typedef struct mseg_multiseg mseg_multiseg;
typedef struct mseg_verdict mseg_verdict;
typedef struct mseg_reports mseg_reports;

typedef struct mseg_rank_config {
  uint64_t prime;
  int trials;
  uint64_t seed;
  int certify; /* nonzero: confirm TRUE verdicts with exact rational rank */
} mseg_rank_config;

typedef struct mseg_gen_params {
  int max_segments;
  int64_t coord_range;
  int64_t max_length;
  int lines;
  uint64_t seed;
} mseg_gen_params;

MSEG_API const char* mseg_status_name(mseg_status s);
MSEG_API const char* mseg_last_error(void);
/* Byte offset of the last MSEG_ERR_PARSE on this thread. */
MSEG_API size_t mseg_last_error_position(void);

MSEG_API void mseg_string_free(char* s);

/* Multisegments */
MSEG_API mseg_status mseg_parse(const char* text, mseg_multiseg** out);
MSEG_API void mseg_free(mseg_multiseg* m);
MSEG_API mseg_status mseg_format(const mseg_multiseg* m, char** out);
MSEG_API size_t mseg_size(const mseg_multiseg* m);
MSEG_API mseg_status mseg_add(const mseg_multiseg* a, const mseg_multiseg* b, mseg_multiseg** out);
MSEG_API mseg_status mseg_dual(const mseg_multiseg* m, mseg_multiseg** out);

MSEG_API mseg_status mseg_is_ladder(const mseg_multiseg* m, int* out);
MSEG_API mseg_status mseg_sli_sufficient(const mseg_multiseg* m, const mseg_multiseg* m2, int* out);

/* MW involution and one reduction step. */
MSEG_API mseg_status mseg_mw_dual(const mseg_multiseg* m, mseg_multiseg** out);
MSEG_API mseg_status mseg_mw_step(const mseg_multiseg* m, mseg_multiseg** delta,
                                  mseg_multiseg** reduced);

/* rho-derivative at the point written "L:K" or "K". soc receives the socle of
 * rho x Z(m); any output pointer may be NULL. */
MSEG_API mseg_status mseg_derivative(const mseg_multiseg* m, const char* rho, size_t* mu,
                                     mseg_multiseg** derived, mseg_multiseg** soc);

/* Conditions */
MSEG_API void mseg_rank_config_default(mseg_rank_config* cfg);
MSEG_API mseg_status mseg_check_gls(const mseg_multiseg* m, const mseg_rank_config* cfg,
                                    mseg_verdict** out);
MSEG_API mseg_status mseg_check_lc(const mseg_multiseg* m, const mseg_multiseg* m2,
                                   const mseg_rank_config* cfg, mseg_verdict** out);
MSEG_API mseg_status mseg_check_ig(const mseg_multiseg* m, const mseg_multiseg* m2,
                                   const mseg_rank_config* cfg, mseg_verdict** out);
MSEG_API mseg_status mseg_check_li(const mseg_multiseg* m, const mseg_multiseg* m2,
                                   const mseg_rank_config* cfg, mseg_verdict** out);

MSEG_API void mseg_verdict_free(mseg_verdict* v);
MSEG_API int mseg_verdict_holds(const mseg_verdict* v);
MSEG_API int mseg_verdict_certified(const mseg_verdict* v);
MSEG_API int mseg_verdict_trials(const mseg_verdict* v);
/* "num/den" */
MSEG_API mseg_status mseg_verdict_bound(const mseg_verdict* v, char** out);
/* Witness entries, flattened: first the coefficients over X_m ("(i,j)"),
 * then over X_m2 ("(i,j)'"), then for IG the converse witness prefixed
 * "rev". Values are decimal strings. */
MSEG_API size_t mseg_verdict_witness_size(const mseg_verdict* v);
MSEG_API mseg_status mseg_verdict_witness_entry(const mseg_verdict* v, size_t k, char** key,
                                                char** value);

/* Property suites */
MSEG_API void mseg_gen_params_default(mseg_gen_params* p);
/* Number of suite names; mseg_suite_name returns NULL out of range. */
MSEG_API size_t mseg_suite_count(void);
MSEG_API const char* mseg_suite_name(size_t k);
MSEG_API mseg_status mseg_run_suite(const char* name, const mseg_gen_params* p,
                                    const mseg_rank_config* cfg, size_t target,
                                    size_t max_attempts, mseg_reports** out);
MSEG_API void mseg_reports_free(mseg_reports* r);
MSEG_API size_t mseg_reports_count(const mseg_reports* r);
MSEG_API const char* mseg_report_name(const mseg_reports* r, size_t k);
MSEG_API size_t mseg_report_generated(const mseg_reports* r, size_t k);
MSEG_API size_t mseg_report_satisfied(const mseg_reports* r, size_t k);
MSEG_API size_t mseg_report_violation_count(const mseg_reports* r, size_t k);
/* Detail text and '|'-separated inputs of violation v of report k. */
MSEG_API mseg_status mseg_report_violation(const mseg_reports* r, size_t k, size_t v,
                                           char** detail, char** inputs, int* possibly_spurious);
MSEG_API mseg_status mseg_report_bound(const mseg_reports* r, size_t k, char** out);

#ifdef __cplusplus
}
#endif

#endif
