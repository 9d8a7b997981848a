/* Copyright 2026 the specgap developers
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the specgap shared library. Every operation returns a status code
 * and, on success, a heap-allocated JSON document in *out (release it with
 * sg_string_free). Exact integers inside the JSON are decimal strings.
 * The sg_alpha handle is opaque; parse it from the textual grammar
 *   sqrt:p/q | surd:a,b,c,d | dec:<decimal digits> | golden2
 */
#ifndef SPECGAP_H
#define SPECGAP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
    SG_OK = 0,
    SG_ERR_USAGE = 1,
    SG_ERR_VALIDATION = 2,          /* bad domain input, incl. RationalAlpha, InvalidSpec */
    SG_ERR_PRECISION = 3,           /* PrecisionExhausted */
    SG_ERR_FACTOR_TIMEOUT = 4,      /* FactorizationTimeout */
    SG_ERR_POOL_EXHAUSTED = 5,      /* prime pool bound reached */
    SG_ERR_MEMORY_BOUND = 6,        /* configured memory budget exceeded */
    SG_ERR_DIVISIBILITY = 7,        /* exact-division certificate failed (fatal bug signal) */
    SG_ERR_INTERNAL = 99
} sg_status;

typedef struct sg_alpha sg_alpha;

/* Library version, e.g. "0.1.0". Static storage; do not free. */
const char* sg_version(void);

/* Last error message of the calling thread. Static storage; do not free. */
const char* sg_last_error(void);

void sg_string_free(char* s);

sg_status sg_alpha_parse(const char* text, sg_alpha** out);
void sg_alpha_free(sg_alpha* alpha);
/* JSON description of the parsed alpha (path, decimal, surd components). */
sg_status sg_alpha_describe(const sg_alpha* alpha, char** out);

/* -- spectrum ----------------------------------------------------------- */
/* First N eigenvalues; X_decimal (optional, may be NULL) switches to an
 * "all levels <= X" enumeration instead. */
sg_status sg_spectrum(const sg_alpha* alpha, int64_t N, const char* X_decimal, unsigned precision_cap, char** out);
sg_status sg_min_gap(const sg_alpha* alpha, int64_t N, int64_t k, unsigned precision_cap, char** out);
sg_status sg_sweep(const sg_alpha* alpha, const int64_t* Ns, size_t n_count, unsigned precision_cap, char** out);

/* -- diophantine -------------------------------------------------------- */
sg_status sg_continued_fraction(const sg_alpha* alpha, int64_t depth, char** out);
sg_status sg_convergents(const sg_alpha* alpha, int64_t count, char** out);
sg_status sg_dirichlet(const sg_alpha* alpha, const char* Q_decimal, char** out);
sg_status sg_best_divisor(const char* n_decimal, char** out);

/* -- Chebyshev / Pell / primes ------------------------------------------ */
/* kind: "T2" for 2*T_n(x/2), "U" for U_n(x/2). */
sg_status sg_cheb(const char* kind, int64_t n, const char* x_decimal, char** out);
/* n = 1 gives the fundamental solution. */
sg_status sg_pell(int64_t D, int64_t n, char** out);
/* policy: "odd", "1mod4" or "3mod4"; coprime_to_decimal may be NULL. */
sg_status sg_prime_select(const char* epsilon, const char* policy, const char* coprime_to_decimal,
                          uint64_t pool_bound, char** out);

/* -- gap constructions --------------------------------------------------- */
sg_status sg_construct_dirichlet(const sg_alpha* alpha, int64_t N, char** out);
sg_status sg_construct_sqrtd(int64_t D, const uint64_t* primes, size_t n_primes, const int64_t* Ps, size_t n_Ps,
                             int audit_lcm, char** out);
sg_status sg_construct_general(int64_t x, int64_t a, int b, int sign, const char* r_rational,
                               const char* eps_rational, int64_t count, char** out);
sg_status sg_construct_strong(int64_t x, int64_t a, int sign, const char* r_rational, int64_t count, char** out);

/* -- statistics ---------------------------------------------------------- */
sg_status sg_poisson(int64_t N, int64_t trials, int64_t k, uint64_t seed, char** out);
sg_status sg_mult_table(const uint64_t* Xs, size_t n_Xs, uint64_t mem_bound_mb, char** out);
/* T = floor(M^(te_num/te_den)); the exponent must lie in [3, 4]. */
sg_status sg_quadruples(const sg_alpha* alpha, int64_t M, int64_t te_num, int64_t te_den, unsigned precision_cap,
                        char** out);
sg_status sg_report(const sg_alpha* alpha, const int64_t* Ns, size_t n_count, int64_t trials, uint64_t seed,
                    unsigned precision_cap, char** out);

/* Exhaustive identity suites; *out reports per-suite case and failure counts. */
sg_status sg_selftest(char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPECGAP_H */
