#ifndef CONCORDIA_H
#define CONCORDIA_H

/* C interface to the concordia library. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Strings
 * returned through char** are released with cc_string_free. On failure a
 * function returns a nonzero status and cc_last_error() describes it (per
 * thread, valid until the next call on that thread). */

#include <stddef.h>

#if defined(__GNUC__)
#define CC_API __attribute__((visibility("default")))
#else
#define CC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CC_OK = 0,
  CC_ERR_DOMAIN = 1,   /* mathematical precondition failed */
  CC_ERR_USAGE = 2,    /* invalid argument */
  CC_ERR_PARSE = 3,    /* malformed JSON or number syntax */
  CC_ERR_NULL = 4,     /* required pointer argument was NULL */
  CC_ERR_INTERNAL = 5
} cc_status;

typedef struct cc_matrix cc_matrix;
typedef struct cc_poly cc_poly;

CC_API const char* cc_version(void);
CC_API const char* cc_last_error(void);
CC_API void cc_string_free(char* s);

/* Seifert matrices. JSON documents follow the concordia/1 matrix schema:
 * {"epsilon": 1|-1, "complexity": c, "entries": [["p/q", ...], ...]}. */
CC_API cc_status cc_matrix_from_json(const char* json, cc_matrix** out);
CC_API cc_status cc_matrix_from_example(const char* key, cc_matrix** out);
CC_API cc_status cc_matrix_to_json(const cc_matrix* m, char** out);
CC_API cc_status cc_matrix_dim(const cc_matrix* m, size_t* out);
CC_API cc_status cc_matrix_epsilon(const cc_matrix* m, int* out);
CC_API void cc_matrix_free(cc_matrix* m);

CC_API cc_status cc_cable(const cc_matrix* m, long r, cc_matrix** out);
CC_API cc_status cc_block_sum(const cc_matrix* a, const cc_matrix* b, cc_matrix** out);
CC_API cc_status cc_negate(const cc_matrix* m, cc_matrix** out);

/* Laurent polynomials over Q. Coefficients are rational strings, lowest
 * degree first; the polynomial is t^shift * sum c_i t^i. */
CC_API cc_status cc_poly_from_coeffs(const char* const* coeffs, size_t n, long shift, cc_poly** out);
CC_API cc_status cc_poly_to_string(const cc_poly* p, char** out);
CC_API cc_status cc_poly_to_json(const cc_poly* p, char** out);
CC_API cc_status cc_poly_equal_up_to_units(const cc_poly* a, const cc_poly* b, int* out);
CC_API void cc_poly_free(cc_poly* p);

CC_API cc_status cc_alexander(const cc_matrix* m, cc_poly** out);
CC_API cc_status cc_realize(const cc_poly* delta, int epsilon, cc_matrix** out);

/* Reports are returned as JSON objects. */
CC_API cc_status cc_validate(const cc_matrix* m, int* valid, char** report_json);
CC_API cc_status cc_invariants(const cc_matrix* m, char** report_json);
/* s is a rational string, or "inf" for w = -1. */
CC_API cc_status cc_circle_signature(const cc_matrix* m, const char* s, long* out);
CC_API cc_status cc_rho(const cc_matrix* m, const char* tol, double* lo, double* hi);
CC_API cc_status cc_order_classify(const cc_matrix* m, long r_max, unsigned depth, char** report_json);

/* Runs a command-line invocation (argv excludes the program name). The
 * output text is stored in *out and the process exit code in *exit_code:
 * 0 ok, 1 domain error, 2 usage error. */
CC_API cc_status cc_run_command(int argc, const char* const* argv, char** out, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
