/* C API for the twopow library: enumeration of sums of two positive k-th
 * powers, gap and exceptional-set statistics, and circle-method evaluators.
 *
 * Conventions:
 *   - every function returns a twopow_status; results go to out-parameters
 *   - quantities that may exceed 64 bits cross the boundary as decimal
 *     strings ("128-bit budget"); smaller quantities use native types
 *   - strings returned through char** are heap-allocated JSON documents;
 *     release them with twopow_free_string
 *   - on error, twopow_last_error() describes the violated precondition
 *     (thread-local message)
 */
#ifndef TWOPOW_H
#define TWOPOW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twopow_status {
    TWOPOW_OK = 0,
    TWOPOW_ERR_DOMAIN = 1,   /* precondition violated */
    TWOPOW_ERR_RANGE = 2,    /* 128-bit budget or memory budget exceeded */
    TWOPOW_ERR_FORMAT = 3,   /* unparsable input or checkpoint */
    TWOPOW_ERR_VERIFY = 4,   /* a verification suite reported failures */
    TWOPOW_ERR_INTERNAL = 5
} twopow_status;

const char* twopow_last_error(void);
void twopow_free_string(char* s);

/* ---- exponents ---- */

/* {"k":..,"sigma":"1/2","theta":"7/18","phi":"4/9",...} */
twopow_status twopow_exponent_table(int k, char** out_json);

/* X, Y, H, Q, Z-admissibility flags for (k, N, Z) */
twopow_status twopow_circle_parameters(int k, double n, long long z, char** out_json);

/* ---- enumerator ---- */

typedef struct twopow_stream twopow_stream; /* opaque */

/* duplicate-free increasing stream of sums of two positive k-th powers
 * over [lo, hi]; lo/hi are decimal strings */
twopow_status twopow_stream_open(int k, const char* lo, const char* hi,
                                 twopow_stream** out);

/* resume from a checkpoint JSON document produced by the same k */
twopow_status twopow_stream_resume(const char* checkpoint_json, const char* hi,
                                   twopow_stream** out);

/* 1 = item produced, 0 = stream exhausted, otherwise an error code.
 * value/x/y receive decimal strings; buffers must hold >= 48 bytes. */
int twopow_stream_next(twopow_stream* s, char* value, long long* reps,
                       char* x, char* y);

twopow_status twopow_stream_checkpoint(twopow_stream* s, char** out_json);
void twopow_stream_close(twopow_stream* s);

/* distinct and pair counts up to N, with the Gamma-factor main term */
twopow_status twopow_nu(int k, const char* n, char** out_json);

twopow_status twopow_nu_main_term(int h, double n, double* out);

/* smallest witness (x, y), x <= y, with x^k + y^k = n, or "none" */
twopow_status twopow_is_sum(int k, const char* n, char** out_json);

/* ---- gaps ---- */

twopow_status twopow_gap_statistics(int k, const char* n1, const char* n2,
                                    int segments, char** out_json);

twopow_status twopow_exceptional_count(int k, const char* n, const char* z,
                                       char** out_json);

twopow_status twopow_xi(int k, const char* n, const char* z, char** out_json);

twopow_status twopow_greedy(int k, const char* n, char** out_json);

/* ---- circle ---- */

/* alpha is "a/q" (exact) or a decimal string */
twopow_status twopow_weyl_sum(const char* alpha, double p, int k, char** out_json);

twopow_status twopow_linear_sum(const char* alpha, long long z, char** out_json);

twopow_status twopow_gauss_sum(long long q, long long a, int k, char** out_json);

/* kind: "m" for the Q-bounded major family, "n" for the X-bounded
 * differenced family; q_bound_override/radius_override <= 0 mean
 * "derive from (k, N, Z)" */
twopow_status twopow_classify(const char* kind, int k, double n, long long z,
                              long long q_bound_override, double radius_override,
                              const char* alpha, char** out_json);

twopow_status twopow_f_sum(const char* alpha, int k, double n, long long z,
                           char** out_json);

/* r(n; Z) for every n in (n1, n2]; n1 = n2 = 0 selects the full reachable
 * window. mem_cap_mb <= 0 reads TWOPOW_MEM_MB (default 2048). */
twopow_status twopow_spectrum(int k, double n, long long z, const char* n1,
                              const char* n2, int mem_cap_mb, char** out_json);

twopow_status twopow_upsilon(int k, double n, long long z, int mem_cap_mb,
                             char** out_json);

/* ---- oracles ---- */

/* which: "i1" | "t" | "i2" | "i5" | "subst" | "annihilate";
 * override_h <= 0 means "use the derived H" */
twopow_status twopow_oracle(const char* which, int k, double n, long long z,
                            long long override_h, char** out_json);

/* ---- verification ---- */

/* runs the exact identity suite; TWOPOW_ERR_VERIFY when a check fails */
twopow_status twopow_verify_identities(int k, double n, long long z,
                                       char** out_json);

/* scale: "small" | "medium" | "large"; emits the criteria table;
 * TWOPOW_ERR_VERIFY when any criterion fails */
twopow_status twopow_reproduce(const char* scale, int segments,
                               unsigned long long seed, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* TWOPOW_H */
