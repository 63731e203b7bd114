/* apkappa: exact characteristic-class calculus for manifold bundles.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed here; every string returned through a char** is owned by the
 * caller and must be released with apk_string_free. Rationals travel as
 * "num/den" strings and JSON documents as UTF-8 text, so the interface is
 * exact end to end.
 *
 * Functions return APK_OK on success; on failure apk_last_error() describes
 * the problem (the message is thread-local and valid until the next failing
 * call on the same thread).
 */
#ifndef APKAPPA_H
#define APKAPPA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum apk_status {
  APK_OK = 0,
  APK_ERROR_INVALID_ARGUMENT = 1, /* bad parameters or contract violation */
  APK_ERROR_PARSE = 2,            /* malformed expression or JSON */
  APK_ERROR_LIMIT = 3,            /* degree above APKAPPA_MAX_DEGREE */
  APK_ERROR_INTERNAL = 4
} apk_status;

typedef struct apk_poly apk_poly;       /* polynomial in a graded generator system */
typedef struct apk_bordism apk_bordism; /* rational oriented bordism class */

const char* apk_version(void);
const char* apk_last_error(void);
void apk_string_free(char* s);
void apk_poly_free(apk_poly* p);
void apk_bordism_free(apk_bordism* b);

/* Degree cap honoured by the enumerating entry points; reads
 * APKAPPA_MAX_DEGREE (default 32). */
int apk_max_degree(void);

/* ---- polynomials -------------------------------------------------- */

/* system: "ph", "p", or "bsoD" (e.g. "bso4"). expr: "ph1^2*ph2 - 2*ph3". */
apk_status apk_poly_parse(const char* system, const char* expr, apk_poly** out);
apk_status apk_poly_from_json(const char* json, apk_poly** out);
apk_status apk_poly_to_json(const apk_poly* p, char** out);
apk_status apk_poly_to_expression(const apk_poly* p, char** out);

/* {"system": .., "basis": ["p1^2", "p1*e", ...]} of the given degree. */
apk_status apk_monomial_basis_json(const char* system, int degree, char** out);

apk_status apk_poly_coproduct_json(const apk_poly* p, char** out);
apk_status apk_poly_ph_to_p(const apk_poly* p, apk_poly** out);
apk_status apk_poly_p_to_ph(const apk_poly* p, apk_poly** out);
apk_status apk_poly_restrict(const apk_poly* p, int d, apk_poly** out);

/* ---- bordism classes ---------------------------------------------- */

apk_status apk_bordism_cp(int n, apk_bordism** out);
apk_status apk_bordism_product(const apk_bordism* a, const apk_bordism* b, apk_bordism** out);
/* Accepts a shortcut ("cp4", "cp2xcp2") or a bordism JSON document. */
apk_status apk_bordism_parse(const char* text, apk_bordism** out);
apk_status apk_bordism_to_json(const apk_bordism* b, char** out);
/* Characteristic number <x, [M]> as "num/den". */
apk_status apk_pair(const apk_poly* x, const apk_bordism* b, char** out);

/* ---- almost-primitive subspaces ------------------------------------ */

/* {"d":.., "degree":.., "dim":.., "basis": [[term, ...], ...]}.
 * method: 0 = monomial criterion (canonical), 1 = definitional kernel. */
apk_status apk_ap_basis_json(int d, int degree, int method, char** out);
apk_status apk_np_basis_json(int d, int degree, char** out);

/* ---- constraint systems -------------------------------------------- */

/* The linear system relating <.,e>, <.,b> and K(kappa_c) for fibre class f. */
apk_status apk_equations_json(int d, int p, const apk_bordism* fibre, char** out);
/* problem: full data; *satisfied reports the verdict (JSON lists violations). */
apk_status apk_check_json(const char* problem, char** verdict, int* satisfied);
/* problem with "?" holes; *solvable reports consistency. */
apk_status apk_solve_json(const char* problem, char** solution, int* solvable);

/* ---- projective-bundle oracle --------------------------------------- */

/* Verifies the bundle constraint equation on P(O(a_0)+...+O(a_r)) -> CP^m.
 * x_expr: one almost-primitive class over ph, or NULL to sweep the whole
 * canonical basis in the matching degree. *all_equal is 1 when every report
 * came out equal (a 0 is a bug somewhere, not admissible data). */
apk_status apk_verify_bundle_json(int m, const int* twists, size_t n_twists, const char* x_expr,
                                  char** report, int* all_equal);

#ifdef __cplusplus
}
#endif

#endif /* APKAPPA_H */
