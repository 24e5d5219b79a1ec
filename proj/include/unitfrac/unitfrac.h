/* C interface to the unitfrac library.
 *
 * Every function returning uf_status stores a message retrievable through
 * uf_last_error() on failure.  Strings handed out through char** parameters
 * are heap copies; release them with uf_string_free().  Handles are opaque
 * and single-owner; a handle may be used from several threads only for
 * concurrent reads.
 */
#ifndef UNITFRAC_UNITFRAC_H_
#define UNITFRAC_UNITFRAC_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uf_status {
  UF_OK = 0,
  UF_ERROR_INVALID_ARGUMENT = 2,
  UF_ERROR_INTRACTABLE = 3,
  UF_ERROR_VERIFICATION = 4,
  UF_ERROR_NO_MEMORY = 5,
  UF_ERROR_INTERNAL = 6
} uf_status;

typedef struct uf_prime_set uf_prime_set;
typedef struct uf_solution_set uf_solution_set;

/* Library version string, statically allocated. */
const char* uf_version(void);

/* Message from the last failing call on this thread; "" when none.  The
 * pointer stays valid until the next failing call on the same thread. */
const char* uf_last_error(void);

void uf_string_free(char* s);

/* Deterministic for every 64-bit input. */
int uf_is_prime(uint64_t n);

/* ---- prime sets ------------------------------------------------------- */

/* Rejects empty input, duplicates, and composites.  Order is normalized. */
uf_status uf_prime_set_new(const uint64_t* primes, size_t count,
                           uf_prime_set** out);
void uf_prime_set_free(uf_prime_set* s);
size_t uf_prime_set_size(const uf_prime_set* s);
uint64_t uf_prime_set_get(const uf_prime_set* s, size_t index);

/* gcd over S of (p - 1) divides rank - 1. */
int uf_gcd_condition(const uf_prime_set* s, unsigned rank);
/* The gcd condition together with min(S) <= rank.  Necessary, not
 * sufficient. */
int uf_is_admissible(const uf_prime_set* s, unsigned rank);
/* Largest exponent in a one-prime solution: (rank - 1) / (p - 1). */
uf_status uf_one_prime_cap(uint64_t p, unsigned rank, unsigned* out);

/* ---- enumeration ------------------------------------------------------ */

typedef struct uf_enum_options {
  int require_all_primes;  /* keep only solutions using every prime of S */
  unsigned parallel_width; /* worker threads over the first denominator */
  unsigned exponent_cap;   /* cap each candidate exponent; 0 = none */
  double budget_seconds;   /* wall-clock ceiling; <= 0 = unlimited */
} uf_enum_options;

/* opts may be NULL for defaults (no filter, no budget, single thread). */
uf_status uf_enumerate_restricted(const uf_prime_set* s, unsigned rank,
                                  const uf_enum_options* opts,
                                  uf_solution_set** out);
uf_status uf_count_restricted(const uf_prime_set* s, unsigned rank,
                              const uf_enum_options* opts, uint64_t* total,
                              uint64_t* proper);
/* {"total", "proper", "max_denominator", "max_denominator_proper",
 *  "max_denominator_factorization"}; maxima are null when absent. */
uf_status uf_survey_json(const uf_prime_set* s, unsigned rank,
                         const uf_enum_options* opts, char** json);

uf_status uf_enumerate_one_prime(uint64_t p, unsigned rank,
                                 uf_solution_set** out);
uf_status uf_count_one_prime(uint64_t p, unsigned rank, double budget_seconds,
                             uint64_t* out);

/* Refuses rank > 6 unless force is set. */
uf_status uf_enumerate_unrestricted(unsigned rank, int force,
                                    uf_solution_set** out);

/* *found = 0 with UF_OK when no admissible rank <= max_rank works. */
uf_status uf_lowest_rank(const uf_prime_set* s, unsigned max_rank,
                         double budget_seconds, unsigned* out_rank,
                         int* found);

/* Feasibility, survey, and greedy comparison for (S, rank) in one object. */
uf_status uf_analyze_json(const uf_prime_set* s, unsigned rank,
                          const uf_enum_options* opts, char** json);

/* ---- solution sets ---------------------------------------------------- */

/* Wraps one externally supplied tuple of decimal strings, verified to sum
 * to 1 (and to be S-smooth when s is given).  A failing tuple is refused
 * with UF_ERROR_VERIFICATION. */
uf_status uf_solution_set_from_tuple(const char* const* denominators,
                                     size_t count, const uf_prime_set* s,
                                     uf_solution_set** out);

unsigned uf_solution_set_rank(const uf_solution_set* set);
size_t uf_solution_set_count(const uf_solution_set* set);
/* Denominator j of solution i as a decimal string. */
uf_status uf_solution_set_denominator(const uf_solution_set* set, size_t i,
                                      size_t j, char** out);
/* NULL *out with UF_OK when the set is empty. */
uf_status uf_solution_set_max_denominator(const uf_solution_set* set,
                                          char** out);
uf_status uf_solution_set_json(const uf_solution_set* set, char** out);
uf_status uf_solution_set_csv(const uf_solution_set* set, char** out);
void uf_solution_set_free(uf_solution_set* set);

/* ---- greedy ----------------------------------------------------------- */

/* {"prefix", "sigma", "gamma", "bound", "exact_completion"} and, when
 * compare is nonzero, {"total_count", "proper_count", "true_max",
 * "verdict"} with verdict TIGHT | SLACK | FAILURE | NO_SOLUTIONS. */
uf_status uf_greedy_json(const uf_prime_set* s, unsigned rank, int compare,
                         const uf_enum_options* opts, char** json);

/* ---- families --------------------------------------------------------- */

/* Each constructor verifies its tuple before returning it as a singleton
 * set; a tuple that cannot exist yields UF_ERROR_VERIFICATION. */
uf_status uf_family_canonical(uint64_t p, unsigned rank,
                              uf_solution_set** out);
uf_status uf_family_fermat(unsigned n, unsigned rank, uf_solution_set** out);
uf_status uf_family_mersenne(unsigned q, unsigned rank, uf_solution_set** out);
uf_status uf_family_pow2_gap(uint64_t p, unsigned rank, uf_solution_set** out);
/* Doubles the last denominator of solution index in set. */
uf_status uf_family_double_last(const uf_solution_set* set, size_t index,
                               uf_solution_set** out);

/* Checks sum = 1 and ordering; with s, smoothness; with require_all_primes,
 * coverage; with rank > 0, the length.  *pass reports the outcome and the
 * JSON itemizes each check. */
uf_status uf_verify(const char* const* denominators, size_t count,
                    const uf_prime_set* s, int require_all_primes,
                    unsigned rank, int* pass, char** report_json);

/* ---- analysis --------------------------------------------------------- */

/* spec_json: {"kind": one_prime_counts | greedy_bounds | greedy_failures |
 * lowest_ranks | max_denominators | pair_counts | thabit_maxdenoms |
 * runtimes, "primes": [..], "rank_lo", "rank_hi", "t_lo", "t_hi",
 * "max_rank", "budget_seconds", "parallel_width", "thabit_kind"}, all
 * fields past kind optional.  format: "json" or "csv". */
uf_status uf_generate_table(const char* spec_json, const char* format,
                            char** out);

uf_status uf_fit_log_model(const uint64_t* ps, const double* ranks,
                           size_t count, double* slope, double* intercept,
                           double* rss);
/* Fit over the transcribed (p, lowest rank) reference pairs:
 * {"slope", "intercept", "rss", "points": [{"p", "rank"}, ..]}. */
uf_status uf_fit_reference_json(char** out);

/* Recompute the published one-prime counting sequences term by term:
 * {"all_pass", "terms": [{"p", "t", "rank", "expected", "computed",
 * "pass"}, ..]}. */
uf_status uf_reference_crosscheck_json(char** out);

#ifdef __cplusplus
}
#endif

#endif /* UNITFRAC_UNITFRAC_H_ */
