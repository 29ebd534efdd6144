#ifndef SCHUBERT_H
#define SCHUBERT_H

/* C interface to the schubert engine: exact Lie-theoretic computations behind
 * the smoothness classification pipelines (weight multiplicities, diagram
 * folding, affine Weyl / nil-Hecke arithmetic, Laurent-matrix Smith profiles).
 *
 * All functions returning a char** allocate the string with malloc-compatible
 * storage; release it with schubert_string_free. Weight/coroot arrays must
 * have length equal to the rank of the root system handle they are used with.
 * On any non-OK status, schubert_last_error() describes the failure (thread
 * local, overwritten by the next failing call on the same thread).
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum schubert_status {
  SCHUBERT_OK = 0,
  SCHUBERT_ERR_INVALID_ARGUMENT = 1,
  SCHUBERT_ERR_VERIFICATION = 2,
  SCHUBERT_ERR_LIMIT = 3,
  SCHUBERT_ERR_INTERNAL = 4
} schubert_status;

typedef struct schubert_rootsys schubert_rootsys; /* opaque */

const char* schubert_version(void);
const char* schubert_last_error(void);
void schubert_string_free(char* s);

/* ---------------------------------------------------------------- root systems */

/* type_label: one of "A".."G" (or a full label like "D4", then rank may be 0). */
schubert_status schubert_rootsys_create(const char* type_label, int rank,
                                        schubert_rootsys** out);
void schubert_rootsys_destroy(schubert_rootsys* rs);

int schubert_rootsys_rank(const schubert_rootsys* rs);
long long schubert_rootsys_positive_root_count(const schubert_rootsys* rs);

/* <weight, coroot>: weight in fundamental-weight coordinates, coroot in
 * simple-coroot coordinates. */
schubert_status schubert_pairing(const schubert_rootsys* rs,
                                 const long long* weight,
                                 const long long* coroot, long long* out);

schubert_status schubert_is_minuscule(const schubert_rootsys* rs,
                                      const long long* weight, int* out);
schubert_status schubert_is_quasi_minuscule(const schubert_rootsys* rs,
                                            const long long* weight, int* out);
schubert_status schubert_is_wmf(const schubert_rootsys* rs,
                                const long long* weight, int* out);

/* Exact values as decimal strings (they can exceed any fixed-width integer). */
schubert_status schubert_weight_multiplicity(const schubert_rootsys* rs,
                                             const long long* mu,
                                             const long long* lambda,
                                             char** out);
schubert_status schubert_dim_irrep(const schubert_rootsys* rs,
                                   const long long* mu, char** out);

/* ------------------------------------------------------------- JSON pipelines */
/* Every pipeline emits a versioned JSON document ("schema": "schubert-smooth/1")
 * with deterministic, byte-stable output for fixed inputs. */

schubert_status schubert_mult_table_json(const schubert_rootsys* rs,
                                         const long long* mu, char** out_json);
schubert_status schubert_wmf_json(const schubert_rootsys* rs,
                                  const long long* mu, char** out_json);

/* Folding of the canonical diagram automorphism of the given order
 * (order 1: identity; order 2: flip; order 3: rank-4 D triality). */
schubert_status schubert_fold_json(const char* type_label, int rank, int order,
                                   char** out_json);
/* case_name: one of "C-BC_n", "B-C_n", "C-B_n", "F4^I", "G2^I" (or with the
 * rank substituted, e.g. "C-BC_3"); n is the family parameter. */
schubert_status schubert_fold_case_json(const char* case_name, int n,
                                        char** out_json);

/* case_ab: "A" or "B"; both tower words at level l. */
schubert_status schubert_kumar_json(const char* case_ab, int l, char** out_json);

/* check: "all", "smith", "matrix", "orthogonality", "sigma", "dimension",
 * "commute", or "injectivity". Status is SCHUBERT_ERR_VERIFICATION if any
 * requested check fails. seed drives the randomized injectivity probe. */
schubert_status schubert_triality_json(const char* check, unsigned seed,
                                       char** out_json);

/* matrix_json: a LaurentMatrix document; see README for the format. */
schubert_status schubert_smith_json(const char* matrix_json, char** out_json);

schubert_status schubert_howe_json(int max_rank, int coord_bound,
                                   char** out_json);
/* Renders any pipeline JSON document as aligned plain text. */
schubert_status schubert_render_table(const char* json_doc, char** out_text);
schubert_status schubert_classify_json(int max_rank, int coord_bound,
                                       char** out_json);
schubert_status schubert_pu3_tower_json(int l_max, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SCHUBERT_H */
