/* C interface to the halfline library: self-adjoint couplings of the
 * first-order expression i u' + A u across two half-lines, with
 * closed-form resolvents and spectrum probes.
 *
 * Conventions:
 *   - every object is an opaque handle created by a hl_*_create/_from_json
 *     call and released by the matching hl_*_free;
 *   - structured data crosses the boundary as JSON text (complex scalars
 *     are [re, im] pairs, matrices row-major flat lists next to "dim");
 *   - atom coefficient vectors are expressed in the eigenbasis of A,
 *     eigenvalues ascending;
 *   - strings returned through char** are owned by the caller and released
 *     with hl_string_free;
 *   - all calls return HL_OK on success; hl_last_error() describes the most
 *     recent failure on the calling thread.
 */

#ifndef HALFLINE_H
#define HALFLINE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hl_operator hl_operator;   /* Hermitian coefficient A */
typedef struct hl_unitary hl_unitary;     /* unitary boundary coupling W */
typedef struct hl_extension hl_extension; /* the extension L_W on (a, b) */
typedef struct hl_function hl_function;   /* two-component atom function */

typedef enum hl_status {
  HL_OK = 0,
  HL_ERR_INVALID_ARGUMENT = 1,
  HL_ERR_NOT_SQUARE = 2,
  HL_ERR_NOT_HERMITIAN = 3,
  HL_ERR_NOT_UNITARY = 4,
  HL_ERR_DIMENSION_MISMATCH = 5,
  HL_ERR_SIDE_MISMATCH = 6,
  HL_ERR_OUT_OF_DOMAIN = 7,
  HL_ERR_NOT_IN_DOMAIN = 8,
  HL_ERR_TOO_CLOSE_TO_REAL_AXIS = 9,
  HL_ERR_DEGENERATE_KERNEL = 10,
  HL_ERR_ZERO_VECTOR = 11,
  HL_ERR_WRONG_HALF_PLANE = 12,
  HL_ERR_PARSE = 13,
  HL_ERR_INTERNAL = 14
} hl_status;

const char* hl_version(void);
const char* hl_status_name(hl_status status);
const char* hl_last_error(void);
void hl_string_free(char* s);

/* --- operators ---------------------------------------------------------- */

/* Input: {"dim": n, "matrix": [[re, im] x n*n]}. */
hl_status hl_hermitian_from_json(const char* json, hl_operator** out);
/* Output adds "eigenvalues" and "eigenvectors". */
hl_status hl_hermitian_to_json(const hl_operator* A, char** out_json);
int hl_operator_dim(const hl_operator* A);
/* Fills eigenvalues[0..len) in ascending order; len must equal dim. */
hl_status hl_operator_eigenvalues(const hl_operator* A, double* eigenvalues, int len);
void hl_operator_free(hl_operator* A);

hl_status hl_unitary_from_json(const char* json, hl_unitary** out);
hl_status hl_unitary_phase(int dim, double phi, hl_unitary** out); /* e^{i phi} I */
void hl_unitary_free(hl_unitary* W);

/* --- the extension ------------------------------------------------------ */

hl_status hl_extension_create(const hl_operator* A, const hl_unitary* W, double a,
                              double b, hl_extension** out);
/* diag((k pi)^2) on n_modes cosine channels, coupling e^{i phi} I, a=-1, b=1. */
hl_status hl_neumann_extension(int n_modes, double phi, hl_extension** out);
void hl_extension_free(hl_extension* ext);

/* --- functions ----------------------------------------------------------- */

/* {"left": {...}, "right": {...}} with per-side
 * {"side","anchor","dim","atoms":[{"rate":[re,im],"coeff":[[re,im],...]}]}. */
hl_status hl_function_from_json(const char* json, hl_function** out);
hl_status hl_function_to_json(const hl_function* u, char** out_json);
hl_status hl_function_zero(int dim, double a, double b, hl_function** out);
/* The norm-bound witness (0, e^{-i(conj(lambda)-A)t} f0); f0_json is a
 * [re,im]-pair array in the eigenbasis, NULL for the all-ones vector. */
hl_status hl_function_witness(const hl_extension* ext, double lambda_re,
                              double lambda_im, const char* f0_json, hl_function** out);
hl_status hl_function_norm_sq(const hl_function* u, double* out);
/* Value at t as a JSON vector; t must lie on one of the two rays. */
hl_status hl_function_evaluate(const hl_function* u, double t, char** out_json);
void hl_function_free(hl_function* u);

/* --- analysis ------------------------------------------------------------ */

/* Resolvent at lambda (dispatches on sign of Im lambda). Result:
 * {"lambda","residual","bc_defect","u",("f_star"|"g_star")}. */
hl_status hl_resolve(const hl_extension* ext, double lambda_re, double lambda_im,
                     const hl_function* f, char** out_json);

/* Randomized Lagrange-identity sweep:
 * {"trials","seed","max_defect","mean_defect","tolerance","pass"}. */
hl_status hl_green_check(const hl_operator* A, double a, double b, int trials,
                         uint64_t seed, char** out_json);

/* {"left": {"m","n"}, "right": {"m","n"}}. */
hl_status hl_deficiency(const hl_operator* A, char** out_json);

/* {"gamma1": [...], "gamma2": [...]}. */
hl_status hl_boundary_map(const hl_function* u, char** out_json);

/* Constant-norm certificate at a (possibly complex) lambda:
 * {"lambda","norm_variation","not_eigenvalue","samples"}. */
hl_status hl_point_spectrum(const hl_extension* ext, double lambda_re, double lambda_im,
                            const char* f0_json, int samples, char** out_json);

/* Witness-ratio sweep over {x + i eps}. Either output may be NULL.
 * CSV columns: x,epsilon,witness_ratio,bound,satisfied. */
hl_status hl_spectrum_scan(const hl_extension* ext, const double* xs, int n_x,
                           const double* epsilons, int n_eps, const char* f0_json,
                           char** out_csv, char** out_json);

/* Cosine-mode field samples of u on t_points x {n_x points of [0,1]};
 * CSV columns: t,x,re_u,im_u. */
hl_status hl_field_csv(const hl_function* u, const double* t_points, int n_t, int n_x,
                       char** out_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HALFLINE_H */
