/* qnp — necklace / permutation / critical-orbit correspondence toolkit.
 *
 * C interface to the computation core. All functions that produce text
 * allocate the result with qnp_string-ownership; release it with
 * qnp_free(). On failure they return a nonzero status and leave a
 * diagnostic retrievable through qnp_last_error(ctx). A context carries
 * configuration (field modulus and basis choices, root precision, table
 * budget) plus the last error message; contexts are cheap and must not be
 * shared between threads without external locking.
 */
#ifndef QNP_H
#define QNP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qnp_status {
    QNP_OK = 0,
    QNP_ERROR_USAGE = 1,       /* bad input or violated precondition */
    QNP_ERROR_CONSISTENCY = 2, /* an internal cross-check failed */
    QNP_ERROR_INTERNAL = 3
} qnp_status;

typedef struct qnp_ctx qnp_ctx;

qnp_ctx* qnp_ctx_new(void);
void qnp_ctx_free(qnp_ctx* ctx);

const char* qnp_last_error(const qnp_ctx* ctx);
const char* qnp_version(void);
void qnp_free(char* text);

/* Configuration. Polynomials accept sparse text ("x^4+x+1") or hex
 * ("0x13", bit i = coefficient of x^i). */
qnp_status qnp_set_modulus(qnp_ctx* ctx, uint32_t n, const char* poly);
qnp_status qnp_set_beta_exponent(qnp_ctx* ctx, uint32_t n, uint64_t k);
qnp_status qnp_set_precision(qnp_ctx* ctx, double absolute_tolerance);
qnp_status qnp_set_table_budget(qnp_ctx* ctx, uint32_t max_n);

qnp_status qnp_gamma(qnp_ctx* ctx, uint32_t n, uint64_t* out);

/* Formats: "plain", "json", "csv". Sets: n-, n+, n~+, nbar, nbar1, nbar2,
 * cup, i-, i~+, dbar. */
qnp_status qnp_enumerate(qnp_ctx* ctx, const char* set_name, uint32_t n, const char* fmt,
                         char** out);

/* Maps: xi, xi-inv, rotate, invert, twisted-shift, extended-twisted-shift,
 * omega, pm-twisted-shift, psi-plus, theta-plus, phi, lambda, wr-phi,
 * wr-psi, itinerary, a-of-sigma, reutenauer, kneading-sequence,
 * kneading-angle, doubling, fold, fold-max. Pass n = 0 unless the map
 * needs a field degree. */
qnp_status qnp_map(qnp_ctx* ctx, const char* map_name, const char* input, uint32_t n,
                   const char* fmt, char** out);

/* One correspondence row per real root of the degree-n Gleason polynomial,
 * ascending in the center. */
qnp_status qnp_table(qnp_ctx* ctx, uint32_t n, const char* fmt, char** out);

qnp_status qnp_gleason_poly(qnp_ctx* ctx, uint32_t n, int mod2, int factored, const char* fmt,
                            char** out);

qnp_status qnp_count_report(qnp_ctx* ctx, uint32_t n, const char* fmt, char** out);

/* suites: comma-separated subset of
 * bijections,weiss_rogers,gf2,gleason,counting,dynamics; empty or NULL
 * runs everything. max_n = 0 keeps the per-suite defaults. The number of
 * failed checks lands in *failures. */
qnp_status qnp_verify(qnp_ctx* ctx, uint32_t max_n, const char* suites, uint32_t jobs,
                      const char* fmt, char** out, uint32_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* QNP_H */
