#ifndef HACHOW_H
#define HACHOW_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HACHOW_BUILDING)
#define HACHOW_API __attribute__((visibility("default")))
#else
#define HACHOW_API
#endif

typedef enum hachow_status {
    HACHOW_OK = 0,
    HACHOW_E_INVALID_ARGUMENT = 1,
    HACHOW_E_PARSE = 2,
    HACHOW_E_ADMISSIBILITY = 3,
    HACHOW_E_UNSUPPORTED_SHAPE = 4,
    HACHOW_E_FACTOR_BOUND = 5,
    HACHOW_E_NO_DECOMPOSITION = 6,
    HACHOW_E_QUADRATURE = 7,
    HACHOW_E_DOMAIN = 8,
    HACHOW_E_INTERNAL = 9,
    /* the report was produced but the check it describes failed */
    HACHOW_E_CHECK_FAILED = 10
} hachow_status;

typedef struct hachow_config hachow_config;
typedef struct hachow_cycle hachow_cycle;

HACHOW_API const char* hachow_version(void);
HACHOW_API const char* hachow_status_name(hachow_status status);

/* Message of the last failing call on this thread, "" if none. */
HACHOW_API const char* hachow_last_error(void);
/* Byte offset of the last parse error on this thread, -1 if none. */
HACHOW_API long hachow_last_error_position(void);

/* Strings handed out by the library. */
HACHOW_API void hachow_string_free(char* s);

HACHOW_API hachow_config* hachow_config_new(void);
HACHOW_API void hachow_config_free(hachow_config* cfg);
HACHOW_API hachow_status hachow_config_set_field(hachow_config* cfg, const char* name);
HACHOW_API hachow_status hachow_config_set_precision(hachow_config* cfg, long bits);
HACHOW_API hachow_status hachow_config_set_tolerance(hachow_config* cfg, double tol);
HACHOW_API hachow_status hachow_config_set_max_depth(hachow_config* cfg, int depth);
HACHOW_API hachow_status hachow_config_set_factor_bound(hachow_config* cfg, uint64_t bound);
/* comma-separated field elements, each a Gaussian prime; "" restores the default set */
HACHOW_API hachow_status hachow_config_set_primes(hachow_config* cfg, const char* primes);
HACHOW_API hachow_status hachow_config_set_height(hachow_config* cfg, long height);
HACHOW_API hachow_status hachow_config_set_denom_bound(hachow_config* cfg, long bound);

HACHOW_API hachow_status hachow_cycle_parse(const hachow_config* cfg, const char* text, hachow_cycle** out);
HACHOW_API void hachow_cycle_free(hachow_cycle* z);
HACHOW_API hachow_status hachow_cycle_to_string(const hachow_cycle* z, char** out);
HACHOW_API hachow_status hachow_cycle_boundary(const hachow_cycle* z, hachow_cycle** out);
HACHOW_API int hachow_cycle_dimension(const hachow_cycle* z);
HACHOW_API int hachow_cycle_is_zero(const hachow_cycle* z);

/*
 * Reports. Each writes a JSON document (sorted keys, inputs echoed) to *json,
 * to be released with hachow_string_free. On HACHOW_E_CHECK_FAILED the
 * document is still written; on other errors *json is left NULL.
 */
HACHOW_API hachow_status hachow_report_boundary(const hachow_config* cfg, const hachow_cycle* z, char** json);
/* force_numeric: integrate curves in box^3 instead of using the closed form */
HACHOW_API hachow_status hachow_report_regulator(const hachow_config* cfg, const hachow_cycle* z, int force_numeric,
                                                 char** json);
/* function: "li" (order 1..3), "bloch-wigner" or "trilog" */
HACHOW_API hachow_status hachow_report_polylog(const hachow_config* cfg, const char* function, int order, const char* z,
                                               char** json);
HACHOW_API hachow_status hachow_report_decompose(const hachow_config* cfg, const char* alpha, const char* beta,
                                                 char** json);
/* (p, q) = (1, 1) pairs alpha with beta; (1, 2) ignores both and pairs (i, Z_i) */
HACHOW_API hachow_status hachow_report_pair(const hachow_config* cfg, int p, int q, const char* alpha,
                                            const char* beta, char** json);
HACHOW_API hachow_status hachow_report_ranks(const hachow_config* cfg, int p, int n, char** json);
/*
 * check: "lemma19" (argument: a curve in box^2), "boundary-squared" (any cycle),
 * "totaro-numeric" (argument: alpha), "weight3" (argument ignored).
 */
HACHOW_API hachow_status hachow_report_verify(const hachow_config* cfg, const char* check, const char* argument,
                                              char** json);

#ifdef __cplusplus
}
#endif

#endif
