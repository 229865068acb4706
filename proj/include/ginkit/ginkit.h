/* ginkit C API: reverse-lexicographic generic initial ideals of powers of
 * two-generated complete intersections.
 *
 * All functions are thread-safe; results are immutable after creation and
 * error messages live in a thread-local buffer.  Strings returned by accessor
 * functions are owned by the result handle and stay valid until
 * ginkit_result_free.
 */
#ifndef GINKIT_H
#define GINKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ginkit_status {
  GINKIT_OK = 0,
  GINKIT_ERR_INVALID_PARAMS = 1, /* parameter validation failed */
  GINKIT_ERR_STRUCTURE = 2,      /* a produced sequence violated an invariant */
  GINKIT_ERR_VERIFY = 3,         /* at least one requested check failed */
  GINKIT_ERR_RANGE = 4,          /* index argument out of range */
  GINKIT_ERR_SCALE = 5,          /* outside desk-scale bounds (oracle, bruteforce) */
  GINKIT_ERR_CAP = 6,            /* Groebner basis size cap exceeded */
  GINKIT_ERR_UNSTABLE = 7,       /* oracle runs disagreed across seeds */
  GINKIT_ERR_BUFFER = 8,         /* caller buffer too small */
  GINKIT_ERR_INTERNAL = 9
} ginkit_status;

/* check bitmask for ginkit_verify */
enum {
  GINKIT_CHECK_STRUCTURE = 1,
  GINKIT_CHECK_HILBERT = 2,
  GINKIT_CHECK_CLOSED_FORM = 4,
  GINKIT_CHECK_BETTI = 8,
  GINKIT_CHECK_ORACLE = 16,
  GINKIT_CHECK_DEFAULT = 15
};

typedef struct ginkit_result ginkit_result;

const char* ginkit_version(void);

/* Message for the most recent failure on this thread ("" when none). */
const char* ginkit_last_error(void);

/* --- computing ---------------------------------------------------------- */

/* Computes the minimal generators of gin(I^n) for a type (alpha, beta)
 * complete intersection in `vars` variables raised to `power`. */
ginkit_status ginkit_compute(long long alpha, long long beta, long long power,
                             long long vars, ginkit_result** out);

/* Desk-scale Groebner oracle (vars <= 3, alpha <= 3, beta <= 4, power <= 2):
 * explicit random complete intersection, random change of coordinates, exact
 * Buchberger, read-off of the initial ideal.  max_basis = 0 uses the default
 * cap (overridable via the GINKIT_MAX_BASIS environment variable). */
ginkit_status ginkit_oracle_gin(long long alpha, long long beta, long long power,
                                long long vars, uint64_t seed, size_t max_basis,
                                ginkit_result** out);

void ginkit_result_free(ginkit_result* result);

/* --- accessors ---------------------------------------------------------- */

const char* ginkit_result_case(const ginkit_result* result);
long long ginkit_result_k(const ginkit_result* result);

/* Copies values into the caller buffer; *count receives the true length.
 * Returns GINKIT_ERR_BUFFER when cap is too small (count is still set). */
ginkit_status ginkit_result_lambdas(const ginkit_result* result, long long* buf, size_t cap,
                                    size_t* count);
ginkit_status ginkit_result_gaps(const ginkit_result* result, long long* buf, size_t cap,
                                 size_t* count);

/* NULL when i is out of range. */
const char* ginkit_result_phase(const ginkit_result* result, size_t i);
const char* ginkit_result_generator(const ginkit_result* result, size_t i);
size_t ginkit_result_generator_count(const ginkit_result* result);

/* format is "text", "json" or "m2"; NULL on unknown format. */
const char* ginkit_result_render(ginkit_result* result, const char* format);
const char* ginkit_result_chart(ginkit_result* result);
const char* ginkit_result_report(ginkit_result* result);

/* --- verification ------------------------------------------------------- */

/* Runs the selected checks and attaches their outcomes to the result (the
 * json/text renderings pick them up).  t_max < 0 keeps the default Hilbert
 * sweep bound lambda0 + m.  fault_index >= 0 perturbs lambda_{fault_index} by
 * fault_delta before checking (testing aid).  Returns GINKIT_OK when all
 * requested checks pass, GINKIT_ERR_VERIFY when at least one fails. */
ginkit_status ginkit_verify(ginkit_result* result, unsigned checks, long long t_max,
                            uint64_t seed, long long fault_index, long long fault_delta);

/* --- pointwise Hilbert values (decimal strings) ------------------------- */

ginkit_status ginkit_hilbert_in(long long alpha, long long beta, long long power,
                                long long vars, long long t, char* buf, size_t cap);

/* H_J(t) of the ideal held by the result (including any injected fault). */
ginkit_status ginkit_result_hilbert_j(const ginkit_result* result, long long t, char* buf,
                                      size_t cap);

/* Brute-force monomial-counting oracle; desk-scale (t <= bound, vars <= 5).
 * bound <= 0 uses the default enumeration cap of 60. */
ginkit_status ginkit_hilbert_in_bruteforce(long long alpha, long long beta, long long power,
                                           long long vars, long long t, long long bound,
                                           char* buf, size_t cap);

#ifdef __cplusplus
}
#endif

#endif /* GINKIT_H */
