/* Stable C interface to the power decoding library. All functions return a
 * status code; on any non-OK status powerag_last_error() describes the
 * problem for the calling thread. Field elements travel as integers in
 * [0, q): base-p digits are the coefficients of the residue polynomial,
 * lowest degree first. */
#ifndef POWERAG_H
#define POWERAG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct powerag_code powerag_code;

typedef enum {
  POWERAG_OK = 0,
  POWERAG_ERR_INVALID = 1,    /* bad arguments, config, or parameters */
  POWERAG_ERR_MEMBERSHIP = 2, /* function outside the requested space */
  POWERAG_ERR_DECODE = 3,     /* decoder declared failure (info is filled) */
  POWERAG_ERR_INTERNAL = 4
} powerag_status;

/* message for the most recent failure on this thread; never NULL */
const char* powerag_last_error(void);

/* constructors; *out must be released with powerag_code_free */
powerag_status powerag_code_from_config(const char* json_text, powerag_code** out);
powerag_status powerag_code_from_file(const char* path, powerag_code** out);
void powerag_code_free(powerag_code* code);

/* code parameters; negative on NULL code */
int powerag_code_length(const powerag_code* code);    /* n */
int powerag_code_dimension(const powerag_code* code); /* k */
int powerag_code_distance(const powerag_code* code);  /* designed distance */
int powerag_code_gamma(const powerag_code* code);     /* divisor pole order */
int powerag_code_genus(const powerag_code* code);
int powerag_code_field_size(const powerag_code* code);

/* codeword must hold n entries */
powerag_status powerag_encode(const powerag_code* code, const uint16_t* message,
                              size_t message_len, uint16_t* codeword);

typedef struct {
  int ell;       /* number of powered key equations, >= 1 */
  int s;         /* locator root multiplicity, 1 <= s <= ell */
  int iterative; /* nonzero: grow the degree bound until the solution is
                    unique; zero: single solve at a fixed bound */
  int lambda;    /* fixed-mode degree bound; negative selects the default
                    s * tau_max + genus */
} powerag_decoder_params;

typedef struct {
  int success;      /* nonzero when a message was recovered */
  int error_weight; /* weight of the corrected pattern; -1 on failure */
  int lambda_used;  /* degree bound that produced the outcome */
  int reason;       /* 0 none, 1 no unique kernel, 2 extraction failed,
                       3 validation failed */
} powerag_decode_info;

/* message must hold k entries; info may be NULL. Returns POWERAG_ERR_DECODE
 * on an honest decoding failure. */
powerag_status powerag_decode(const powerag_code* code, const uint16_t* received,
                              size_t received_len, const powerag_decoder_params* params,
                              uint16_t* message, powerag_decode_info* info);

/* largest error weight with an essentially unique solution (dimension
 * count); -1 when no weight qualifies */
powerag_status powerag_radius_exact(const powerag_code* code,
                                    const powerag_decoder_params* params, int* out);
/* closed-form estimate of the same quantity */
powerag_status powerag_radius_closed_form(const powerag_code* code,
                                          const powerag_decoder_params* params, int* out);
/* smallest useful root multiplicity for a given number of equations */
powerag_status powerag_suggest_multiplicity(const powerag_code* code, int ell, int* out);

typedef struct {
  long long successes;
  long long failures;       /* decoder declared failure */
  long long miscorrections; /* decoder returned the wrong message */
  int tau_max_exact;
  int lambda_used; /* -1 in iterative mode */
  double wall_seconds;
} powerag_sim_counts;

/* Monte-Carlo failure-rate estimation: `trials` random messages, each hit
 * with a uniform weight-tau error; reproducible from `seed` alone */
powerag_status powerag_simulate(const powerag_code* code, const powerag_decoder_params* params,
                                int tau, int trials, uint64_t seed, powerag_sim_counts* out);

/* renders one report row per tau; markdown nonzero selects the table layout,
 * zero selects CSV. Caller frees *out with powerag_string_free. */
powerag_status powerag_simulate_report(const powerag_code* code,
                                       const powerag_decoder_params* params, const int* taus,
                                       size_t tau_count, int trials, uint64_t seed, int markdown,
                                       char** out);
void powerag_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* POWERAG_H */
