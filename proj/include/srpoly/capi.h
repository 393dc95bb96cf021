#ifndef SRPOLY_CAPI_H
#define SRPOLY_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque polynomial handle. All results are returned as JSON strings
 * (schema_version 1); free them with srp_string_free. On failure the
 * functions return a nonzero status and, when error is non-NULL, a
 * heap-allocated message the caller must free with srp_string_free. */

typedef struct srp_poly srp_poly;

typedef enum {
  SRP_OK = 0,
  SRP_ERR_PARSE = 1,
  SRP_ERR_INVALID = 2,
  SRP_ERR_STATE = 3,
  SRP_ERR_INTERNAL = 4
} srp_status;

/* coeffs: g+1 rational strings c_0..c_g (low index first, "p" or "p/q") */
srp_status srp_poly_create(const char* const* coeffs, size_t count,
                           srp_poly** out, char** error);

/* lambdas: factor parameters of c_0 prod (x^2 - 2 lambda_j x + 1) */
srp_status srp_poly_from_lambdas(const char* const* lambdas, size_t count,
                                 const char* c0, srp_poly** out, char** error);

void srp_poly_free(srp_poly* p);
int srp_poly_genus(const srp_poly* p);

/* mode: "log", "omega" or "both"; omega_exact = 0 switches the omega run
 * to sample-based rejection (sound only for failure). */
srp_status srp_check(const srp_poly* p, const char* mode, int omega_exact,
                     char** json, char** error);

srp_status srp_rvalues(const srp_poly* p, char** json, char** error);

/* As srp_rvalues for the expanded polynomial, with the closed-form
 * cross-check from the lambda parameters when count <= 3. */
srp_status srp_rvalues_lambdas(const char* const* lambdas, size_t count,
                               char** json, char** error);

/* battery: "canonical", "factorization", "kernel", "omega" or "all" */
srp_status srp_verify(const srp_poly* p, const char* battery, double q,
                      double omega, char** json, char** error);

/* modes: comma-separated OnCircleSimple,OnCircleMultiple,OffCircle,Mixed
 * or "all"; runs count instances per (mode, g) and reports the agreement
 * matrix between the exact criteria and the root oracle. */
srp_status srp_experiment(const char* modes, int g_min, int g_max, int count,
                          uint64_t seed, char** json, char** error);

void srp_string_free(char* s);
const char* srp_version(void);

#ifdef __cplusplus
}
#endif

#endif
