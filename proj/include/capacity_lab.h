/*
 * capacity_lab C API.
 *
 * Opaque handles own C++ values; every call returns a cl_status and, on
 * failure, leaves a message retrievable with cl_last_error() on the calling
 * thread. Strings returned through `char** out` parameters are allocated by
 * the library and released with cl_string_free().
 *
 * Rationals cross the boundary as decimal strings "p" or "p/q"; capacities
 * are reported as their coefficient of pi.
 */
#ifndef CAPACITY_LAB_H
#define CAPACITY_LAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CAPACITY_LAB_BUILD)
#    define CL_API __declspec(dllexport)
#  else
#    define CL_API __declspec(dllimport)
#  endif
#else
#  define CL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_INVALID_ARGUMENT = 1,
  CL_ERR_PARSE = 2,
  CL_ERR_PRECONDITION = 3,
  CL_ERR_DIVISION_BY_ZERO = 4,
  /* reproduce: some k did not violate or missed its closed form */
  CL_ERR_REPRODUCTION_FAILED = 5,
  /* --verify: exact and numeric values disagree beyond tolerance */
  CL_ERR_VERIFICATION_FAILED = 6,
  /* check-certificate: at least one certificate did not re-validate */
  CL_ERR_CERTIFICATE_INVALID = 7,
  CL_ERR_INTERNAL = 99
} cl_status;

typedef enum cl_format { CL_FORMAT_JSON = 0, CL_FORMAT_CSV = 1, CL_FORMAT_TEXT = 2 } cl_format;

typedef enum cl_verdict { CL_VERDICT_VIOLATES = 0, CL_VERDICT_SATISFIES = 1, CL_VERDICT_EQUALITY = 2 } cl_verdict;

typedef struct cl_domain cl_domain;
typedef struct cl_certificate cl_certificate;

typedef struct cl_options {
  uint32_t grid;         /* oracle grid, >= 64 */
  uint32_t refine_iters; /* golden-section iterations */
  double tol;            /* relative tolerance of --verify */
  uint64_t seed;         /* Monte Carlo seed */
  uint32_t jobs;         /* worker threads, 0 = hardware concurrency */
  int verify;            /* nonzero: cross-check exact values numerically */
} cl_options;

CL_API const char* cl_version(void);
CL_API const char* cl_status_name(cl_status status);
/* Message of the last failed call on this thread, "" if none. */
CL_API const char* cl_last_error(void);
CL_API void cl_string_free(char* s);

/* grid 4096, refine 80, tol 1e-9, seed 42, jobs 0, verify off. */
CL_API void cl_options_init(cl_options* options);

/* ---- domains ---------------------------------------------------------- */

/* E(a,b), P(a,b), sum(E(a,b),E(c,d)), prod(<domain>,m,R). */
CL_API cl_status cl_domain_parse(const char* literal, cl_domain** out);
CL_API void cl_domain_free(cl_domain* domain);
CL_API cl_status cl_domain_format(const cl_domain* domain, char** out);
CL_API cl_status cl_domain_scale(const cl_domain* domain, const char* lambda, cl_domain** out);
/* Real dimension of the ambient space. */
CL_API cl_status cl_domain_dimension(const cl_domain* domain, uint32_t* out);
/* The counterexample pair for k as sum(E1,E2): even or odd family by parity. */
CL_API cl_status cl_family(uint64_t k, cl_domain** out);

/* ---- capacities -------------------------------------------------------- */

/* c_k(domain) / pi as "p/q". */
CL_API cl_status cl_capacity(const cl_domain* domain, uint64_t k, char** coeff_out);
/* Floating-point oracle value of c_k(domain) (not divided by pi). */
CL_API cl_status cl_capacity_numeric(const cl_domain* domain, uint64_t k, const cl_options* options, double* out);
/* Rendered capacity; with options->verify also runs the oracle and returns
   CL_ERR_VERIFICATION_FAILED (with *out still set) on disagreement. */
CL_API cl_status cl_capacity_report(const cl_domain* domain, uint64_t k, const cl_options* options,
                                    cl_format format, char** out);

/* Exact dual norm of (v1, v2) over the moment image of a sum domain. */
CL_API cl_status cl_support_norm(const cl_domain* sum, uint64_t v1, uint64_t v2, char** coeff_out);
CL_API cl_status cl_support_norm_numeric(const cl_domain* sum, uint64_t v1, uint64_t v2, const cl_options* options,
                                         double* out);

CL_API cl_status cl_convexity_check(const cl_domain* sum, uint32_t grid, int* ok, double* worst_c1,
                                    double* worst_c2);
/* strict: c_k(sum) > c_k(E(a+c,b+d)); agrees: the critical-point criterion
   gives the same answer. Either pointer may be NULL. */
CL_API cl_status cl_strictness_check(const cl_domain* sum, uint64_t k, int* strict, int* agrees);

/* ---- Minkowski sum geometry -------------------------------------------- */

/* samples + 1 points (psi, pi g^2, pi h^2); CSV header psi,x1,x2. */
CL_API cl_status cl_omega(const cl_domain* sum, uint32_t samples, cl_format format, char** out);
/* A1 x + A2 (A2^T A1^{-1} x / |A2^T A1^{-1} x|) with row-major n x n matrices. */
CL_API cl_status cl_general_cy_map(size_t n, const double* a1, const double* a2, const double* x, double* out);

/* ---- Brunn-Minkowski certificates -------------------------------------- */

/* Both domains must be ellipsoids. */
CL_API cl_status cl_bm_check(uint64_t k, const cl_domain* first, const cl_domain* second, cl_certificate** out);
CL_API void cl_certificate_free(cl_certificate* cert);
CL_API cl_verdict cl_certificate_verdict(const cl_certificate* cert);
CL_API uint64_t cl_certificate_k(const cl_certificate* cert);
/* which: 0 = c_sum, 1 = c1, 2 = c2; coefficient of pi as "p/q". */
CL_API cl_status cl_certificate_value(const cl_certificate* cert, int which, char** out);
CL_API cl_status cl_certificate_format(const cl_certificate* cert, const cl_options* options, cl_format format,
                                       char** out);
/* Recomputes every certificate in a JSON document; *valid counts successes.
   Returns CL_ERR_CERTIFICATE_INVALID if any fails (report still set). */
CL_API cl_status cl_certificate_check_json(const char* json, size_t* total, size_t* valid, char** report);

CL_API cl_status cl_reproduce(uint64_t k_max, const cl_options* options, cl_format format, char** out);
CL_API cl_status cl_search(uint32_t height, uint64_t k_min, uint64_t k_max, const cl_options* options,
                           cl_format format, size_t* found, char** out);

/* ---- mean width and the polydisk criterion ----------------------------- */

CL_API cl_status cl_mean_width(const cl_domain* domain, uint64_t samples, const cl_options* options,
                               double* mean, double* std_error, cl_format format, char** out);
/* *violating: k / floor((k+1)/2) > 16/9. */
CL_API cl_status cl_criterion(uint64_t k, int* violating);
CL_API cl_status cl_criterion_table(uint64_t k_min, uint64_t k_max, cl_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CAPACITY_LAB_H */
