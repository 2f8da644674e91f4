/* Copyright 2026 the discphase authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* discphase -- globally optimal discrete phase configurations for composite
 * channels |h0 + sum_n h_n e^{j theta_n}| with theta_n drawn from the
 * K-point alphabet {0, 2pi/K, ..., (K-1) 2pi/K}.
 *
 * C API of the shared library. All functions are thread-safe as long as a
 * given handle is not used from two threads at once; the library keeps no
 * global mutable state apart from the per-thread error message.
 *
 * Conventions:
 *  - every fallible function returns dp_status; DP_OK is 0,
 *  - on failure, dp_last_error() returns a human-readable detail string
 *    (valid on the calling thread until its next failing call),
 *  - all angles are radians in [0, 2*pi),
 *  - handles are created by dp_* constructors and released with the matching
 *    dp_*_destroy; destroy functions accept NULL.
 */

#ifndef DISCPHASE_H
#define DISCPHASE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DP_BUILDING_LIBRARY)
#define DP_API __declspec(dllexport)
#else
#define DP_API __declspec(dllimport)
#endif
#else
#define DP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dp_status {
  DP_OK = 0,
  DP_ERROR_INVALID_ARGUMENT = 1, /* rejected input (non-finite, bad K, ...) */
  DP_ERROR_PARSE = 2,            /* malformed instance document */
  DP_ERROR_IO = 3,               /* file could not be opened/written */
  DP_ERROR_LIMIT_EXCEEDED = 4,   /* K^N beyond the enumeration limit */
  DP_ERROR_BOOST_UNDEFINED = 5,  /* |h0| = 0: SNR boost has no value */
  DP_ERROR_INTERNAL = 6
} dp_status;

typedef enum dp_algorithm {
  DP_ALGORITHM_SWEEP = 0,           /* breakpoint sweep; globally optimal */
  DP_ALGORITHM_LEMMA1_BASELINE = 1, /* flawed-rule baseline; not optimal */
  DP_ALGORITHM_BRUTE_FORCE = 2      /* exhaustive K^N oracle */
} dp_algorithm;

/* Opaque handles. */
typedef struct dp_instance dp_instance;
typedef struct dp_solution dp_solution;
typedef struct dp_bench_result dp_bench_result;

DP_API const char* dp_version(void);
DP_API const char* dp_status_name(dp_status status);
DP_API const char* dp_last_error(void);

/* --- angle arithmetic and per-element quantizers ----------------------- */

/* x - 2*pi*floor(x/(2*pi)), in [0, 2*pi). Fails on non-finite input. */
DP_API dp_status dp_wrap_2pi(double x, double* out);

/* pi - |wrap_2pi(x) - pi|, in [0, pi]. */
DP_API dp_status dp_f1_gap(double x, double* out);

/* The corrected rule: k in {0..K-1} maximizing cos(k*w + alpha - mu_phase),
 * w = 2*pi/K. Ties (within 1e-12) resolve to the smaller k. */
DP_API dp_status dp_quantize_lemma2(double alpha, double mu_phase, int32_t k,
                                    int32_t* out);

/* The flawed rule: k minimizing wrap_2pi(k*w + alpha - mu_phase). Kept as
 * the baseline/counterexample; picks the alphabet point just
 * counterclockwise of the reference instead of the nearest one, so it
 * disagrees with dp_quantize_lemma2 for half of all reference phases. */
DP_API dp_status dp_quantize_lemma1(double alpha, double mu_phase, int32_t k,
                                    int32_t* out);

/* --- channel instances -------------------------------------------------- */

/* h0 points at {re, im}; h at n interleaved pairs {re0, im0, re1, im1, ...},
 * n >= 1. */
DP_API dp_status dp_instance_create(const double* h0, const double* h,
                                    size_t n, dp_instance** out);

/* Synthetic channel: independent zero-mean Gaussian components, standard
 * deviation direct_scale for h0 and reflect_scale for each element
 * (reflect_scale <= 0 selects the default 1/sqrt(2n)). Bit-reproducible for
 * a given seed. */
DP_API dp_status dp_instance_generate(uint64_t seed, int32_t n,
                                      double direct_scale,
                                      double reflect_scale, dp_instance** out);

/* The canonical N=2 golden instance bundled with the library. Pass
 * use_printed_h2 != 0 to rebuild it with the printed (internally
 * inconsistent) Im(h2) = -2.6605e-11 instead of the corrected -2.6605e-10. */
DP_API dp_status dp_instance_golden(int use_printed_h2, dp_instance** out);

/* JSON document {"h0":[re,im],"h":[[re,im],...],"K":k} with optional "K".
 * k_hint (nullable) receives the hint, or 0 when absent. Parse failures name
 * the offending field. */
DP_API dp_status dp_instance_read_file(const char* path, dp_instance** out,
                                       int32_t* k_hint);
DP_API dp_status dp_instance_read_string(const char* text, dp_instance** out,
                                         int32_t* k_hint);

/* Writes with 17 significant digits: reading the file back reproduces the
 * instance exactly. k_hint <= 0 omits the "K" key. */
DP_API dp_status dp_instance_write_file(const dp_instance* instance,
                                        int32_t k_hint, const char* path);

DP_API size_t dp_instance_element_count(const dp_instance* instance);

/* index 0 is h0; 1..N are the reflected coefficients. */
DP_API dp_status dp_instance_coefficient(const dp_instance* instance,
                                         size_t index, double* re, double* im);

DP_API void dp_instance_destroy(dp_instance* instance);

/* --- solving ------------------------------------------------------------ */

/* Runs one algorithm on an instance. brute_limit caps K^N for
 * DP_ALGORITHM_BRUTE_FORCE (0 selects the default of 10^7); it is ignored by
 * the other algorithms. A zero-magnitude h0 is not an error here: the
 * optimization is well-posed without a direct path and only the boost query
 * fails. */
DP_API dp_status dp_solve(const dp_instance* instance, int32_t k,
                          dp_algorithm algorithm, uint64_t brute_limit,
                          dp_solution** out);

/* Direct evaluation of a caller-chosen configuration. indices holds n
 * entries in {0..K-1}. Outputs may be NULL if not wanted; when boost is
 * requested and |h0| = 0 the function fills everything else and returns
 * DP_ERROR_BOOST_UNDEFINED. */
DP_API dp_status dp_evaluate(const dp_instance* instance, int32_t k,
                             const int32_t* indices, size_t n, double* g_re,
                             double* g_im, double* g_abs, double* boost);

DP_API size_t dp_solution_element_count(const dp_solution* solution);
DP_API dp_status dp_solution_indices(const dp_solution* solution,
                                     int32_t* out);
DP_API dp_status dp_solution_composite(const dp_solution* solution, double* re,
                                       double* im);
DP_API double dp_solution_magnitude(const dp_solution* solution);
DP_API double dp_solution_mu_phase(const dp_solution* solution);
/* DP_ERROR_BOOST_UNDEFINED when the instance had |h0| = 0. */
DP_API dp_status dp_solution_boost(const dp_solution* solution, double* out);
DP_API int32_t dp_solution_algorithm(const dp_solution* solution);
DP_API void dp_solution_destroy(dp_solution* solution);

/* --- golden-vector verification ----------------------------------------- */

typedef struct dp_golden_check {
  char name[56];
  double expected;
  double actual;
  double tolerance;
  int32_t relative;  /* 1: |actual-expected| <= tolerance*|expected| */
  int32_t annotated; /* 1: known printed-value deviation, excluded from the
                        pass/fail aggregate */
  int32_t passed;
} dp_golden_check;

/* Recomputes every cell of the golden reference tables and reports one check
 * per cell. The two internally inconsistent printed cells (the Im(h2)
 * exponent and one cosine) are emitted as annotated deviations. The caller
 * owns the returned array; release it with dp_golden_checks_destroy. */
DP_API dp_status dp_verify_golden(int use_printed_h2, dp_golden_check** out,
                                  size_t* count);
DP_API void dp_golden_checks_destroy(dp_golden_check* checks);

/* --- Monte Carlo benchmark ---------------------------------------------- */

typedef struct dp_bench_config {
  const int32_t* alphabet_sizes;
  size_t n_alphabet_sizes;
  const int32_t* element_counts;
  size_t n_element_counts;
  uint32_t realizations;
  const int32_t* algorithms; /* dp_algorithm values */
  size_t n_algorithms;
  uint64_t master_seed;
  double direct_scale;   /* <= 0 selects 1.0 */
  double reflect_scale;  /* <= 0 selects 1/sqrt(2N) per N */
  uint64_t brute_limit;  /* 0 selects the default of 10^7 */
} dp_bench_config;

typedef struct dp_bench_cell_summary {
  int32_t algorithm;
  int32_t alphabet_size;
  int32_t element_count;
  double mean_db;
  double median_db;
  double min_db;
  double max_db;
  double median_solve_us;
} dp_bench_cell_summary;

/* Runs every (algorithm, K, N) cell for `realizations` channel draws.
 * Realization r of cell (K, N) is seeded by mixing (master_seed, K, N, r),
 * and all algorithms of one realization see the identical instance. Sample
 * data is byte-reproducible for a fixed master seed; timings are not. */
DP_API dp_status dp_bench_run(const dp_bench_config* config,
                              dp_bench_result** out);

DP_API size_t dp_bench_cell_count(const dp_bench_result* result);
DP_API dp_status dp_bench_cell_summary_get(const dp_bench_result* result,
                                           size_t index,
                                           dp_bench_cell_summary* out);
/* Borrow the cell's boost samples (linear scale, realization order); the
 * pointer stays valid until the result is destroyed. */
DP_API dp_status dp_bench_cell_samples(const dp_bench_result* result,
                                       size_t index, const double** samples,
                                       size_t* count);

/* CSV emitters. cdf: `algorithm,K,N,boost_linear,boost_db,cdf`; summary:
 * `algorithm,K,N,mean_db,median_db,min_db,max_db,median_solve_us`. */
DP_API dp_status dp_bench_write_cdf_csv(const dp_bench_result* result,
                                        const char* path);
DP_API dp_status dp_bench_write_summary_csv(const dp_bench_result* result,
                                            const char* path);
DP_API void dp_bench_result_destroy(dp_bench_result* result);

/* Empirical CDF of a raw sample set: unique ascending values with
 * probability (count <= value)/n. values/probabilities must hold n entries;
 * *count receives the number of distinct values actually written. */
DP_API dp_status dp_empirical_cdf(const double* samples, size_t n,
                                  double* values, double* probabilities,
                                  size_t* count);

/* Median wall time (microseconds) of the sweep solver per element count.
 * element_counts must ascend; median_us must hold n entries. repeats == 0
 * writes nothing (*count = 0). */
DP_API dp_status dp_timing_scan(int32_t k, const int32_t* element_counts,
                                size_t n, uint32_t repeats, uint64_t seed,
                                double* median_us, size_t* count);

/* The seed-mixing function used for per-realization streams (SplitMix64
 * finalizer chain); exposed so external tools can reproduce any grid cell. */
DP_API uint64_t dp_derive_seed(uint64_t master, uint64_t a, uint64_t b,
                               uint64_t c);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DISCPHASE_H */
