/* incalg — exact incidence-algebra toolkit: C API for the shared library.
 *
 * Conventions
 *   - Every fallible function returns an incalg_status; INCALG_OK means the
 *     output parameters are populated.  On any failure the thread-local
 *     message returned by incalg_last_error() describes what went wrong.
 *   - Strings returned through `char **` parameters are heap-allocated and
 *     must be released with incalg_string_free().  Strings returned as
 *     `const char *` (version, last error) are borrowed and must not be freed.
 *   - Handles are opaque; release them with the matching *_free function.
 *     Passing NULL to a *_free function is a no-op.
 *   - Rings are named by strings: "Q", "Z", or "Z/<n>" (e.g. "Z/3").
 *   - Preorders and algebra elements are exchanged as JSON documents:
 *       preorder: {"elements": ["a", ...], "relations": [["a","b"], ...]}
 *                 (relations must be reflexively and transitively closed)
 *       element:  {"entries": [{"from":"a","to":"b","value":"3/4"}, ...]}
 *       operator: {"columns": [{"i":"a","j":"b","image": <element>}, ...]}
 *     All scalar values are exact strings, never floats.
 */

#ifndef INCALG_H
#define INCALG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define INCALG_API __attribute__((visibility("default")))

typedef enum incalg_status {
    INCALG_OK = 0,
    INCALG_ERROR_PARSE = 1,        /* malformed JSON or scalar/ring syntax   */
    INCALG_ERROR_INVALID = 2,      /* bad argument, index, label, or ring mix */
    INCALG_ERROR_UNSUPPORTED = 3,  /* operation undefined for this input      */
    INCALG_ERROR_PRECONDITION = 4, /* documented precondition does not hold   */
    INCALG_ERROR_NOMEM = 5         /* allocation failure                      */
} incalg_status;

typedef struct incalg_preorder incalg_preorder;
typedef struct incalg_element incalg_element;

/* Library version as "major.minor.patch".  Borrowed pointer; do not free. */
INCALG_API const char *incalg_version(void);

/* Message describing the most recent failure on this thread.  Borrowed
 * pointer, valid until the next incalg call on the same thread. */
INCALG_API const char *incalg_last_error(void);

/* Release a string allocated by this library. */
INCALG_API void incalg_string_free(char *s);

/* ------------------------------------------------------------------ */
/* Rings                                                               */
/* ------------------------------------------------------------------ */

/* Parse a ring name and return its canonical spelling ("Q", "Z", "Z/7"). */
INCALG_API incalg_status incalg_ring_canonical_name(const char *ring,
                                                    char **name_out);

/* solver_field_out receives 1 when exact linear solving is supported over
 * the ring (Q, or Z/p with p an odd prime; Z/2 only when exploratory != 0),
 * else 0. */
INCALG_API incalg_status incalg_ring_is_solver_field(const char *ring,
                                                     int exploratory,
                                                     int *solver_field_out);

/* ------------------------------------------------------------------ */
/* Preorders                                                           */
/* ------------------------------------------------------------------ */

INCALG_API incalg_status incalg_preorder_parse(const char *json,
                                               incalg_preorder **out);

INCALG_API void incalg_preorder_free(incalg_preorder *p);

/* Serialize with elements in index order and the full closed relation list
 * in lexicographic order. */
INCALG_API incalg_status incalg_preorder_to_json(const incalg_preorder *p,
                                                 char **json_out);

/* Strict document check: parses, and additionally requires the stated
 * relation list to equal its own reflexive-transitive closure.  Returns
 * INCALG_OK for a valid document; INCALG_ERROR_PARSE / INCALG_ERROR_INVALID
 * otherwise with the diagnostic in *diagnostic_out (and incalg_last_error).
 * diagnostic_out may be NULL. */
INCALG_API incalg_status incalg_preorder_validate_json(const char *json,
                                                       char **diagnostic_out);

INCALG_API int incalg_preorder_size(const incalg_preorder *p);

/* leq_out receives 1 if element i <= element j, else 0. */
INCALG_API incalg_status incalg_preorder_leq(const incalg_preorder *p, int i,
                                             int j, int *leq_out);

INCALG_API incalg_status incalg_preorder_label(const incalg_preorder *p,
                                               int i, char **label_out);

INCALG_API incalg_status incalg_preorder_index_of(const incalg_preorder *p,
                                                  const char *label,
                                                  int *index_out);

INCALG_API int incalg_preorder_is_poset(const incalg_preorder *p);

INCALG_API int incalg_preorder_is_connected(const incalg_preorder *p);

INCALG_API incalg_status incalg_preorder_dual(const incalg_preorder *p,
                                              incalg_preorder **out);

/* Visit every preorder on n labeled points (1 <= n <= 5), as JSON documents
 * with elements "1".."n", in a fixed deterministic order.  The visitor
 * returns nonzero to continue, zero to stop early.  count_out (optional)
 * receives the number of preorders visited. */
typedef int (*incalg_preorder_visitor)(const char *preorder_json,
                                       void *user_data);

INCALG_API incalg_status incalg_enumerate_preorders(
    int n, int connected_only, incalg_preorder_visitor visitor,
    void *user_data, unsigned long long *count_out);

/* ------------------------------------------------------------------ */
/* Incidence-algebra elements                                          */
/* ------------------------------------------------------------------ */

INCALG_API incalg_status incalg_element_parse(const incalg_preorder *p,
                                              const char *ring,
                                              const char *json,
                                              incalg_element **out);

INCALG_API void incalg_element_free(incalg_element *f);

INCALG_API incalg_status incalg_element_to_json(const incalg_element *f,
                                                char **json_out);

INCALG_API incalg_status incalg_element_delta(const incalg_preorder *p,
                                              const char *ring,
                                              incalg_element **out);

INCALG_API incalg_status incalg_element_zeta(const incalg_preorder *p,
                                             const char *ring,
                                             incalg_element **out);

/* Mobius function; defined for posets only. */
INCALG_API incalg_status incalg_element_mobius(const incalg_preorder *p,
                                               const char *ring,
                                               incalg_element **out);

/* Standard basis element e_ij; requires i <= j in the preorder. */
INCALG_API incalg_status incalg_element_basis(const incalg_preorder *p,
                                              const char *ring, int i, int j,
                                              incalg_element **out);

INCALG_API incalg_status incalg_element_add(const incalg_element *a,
                                            const incalg_element *b,
                                            incalg_element **out);

INCALG_API incalg_status incalg_element_negate(const incalg_element *a,
                                               incalg_element **out);

/* Multiply by an exact scalar given as a string in the element's ring. */
INCALG_API incalg_status incalg_element_scale(const incalg_element *a,
                                              const char *scalar,
                                              incalg_element **out);

INCALG_API incalg_status incalg_element_convolve(const incalg_element *a,
                                                 const incalg_element *b,
                                                 incalg_element **out);

/* Lie bracket [a,b] = ab - ba. */
INCALG_API incalg_status incalg_element_lie_bracket(const incalg_element *a,
                                                    const incalg_element *b,
                                                    incalg_element **out);

/* Jordan product a∘b = ab + ba. */
INCALG_API incalg_status incalg_element_jordan(const incalg_element *a,
                                               const incalg_element *b,
                                               incalg_element **out);

/* Restriction f|_x^y to the interval [x, y]; requires x <= y. */
INCALG_API incalg_status incalg_element_restrict(const incalg_element *a,
                                                 int x, int y,
                                                 incalg_element **out);

INCALG_API incalg_status incalg_element_diagonal(const incalg_element *a,
                                                 incalg_element **out);

/* value_out receives the exact coefficient at (i, j) as a string ("0" when
 * absent); requires i <= j. */
INCALG_API incalg_status incalg_element_at(const incalg_element *a, int i,
                                           int j, char **value_out);

INCALG_API incalg_status incalg_element_is_central(const incalg_element *a,
                                                   int *central_out);

INCALG_API incalg_status incalg_element_is_zero(const incalg_element *a,
                                                int *zero_out);

INCALG_API incalg_status incalg_element_equals(const incalg_element *a,
                                               const incalg_element *b,
                                               int *equal_out);

/* ------------------------------------------------------------------ */
/* Solvers, decomposition, audit (JSON in / JSON out)                  */
/* ------------------------------------------------------------------ */

/* Compute a basis of the requested operator space.
 *   kind:   "lie" | "derivation"
 *   method: "bruteforce" | "closed_form" | "both"
 * "closed_form" and "both" apply to kind "lie" on connected preorders only.
 * The ring must be a solver field (see incalg_ring_is_solver_field).
 * With "both" the result carries both bases and a span comparison. */
INCALG_API incalg_status incalg_basis_json(const char *preorder_json,
                                           const char *ring, const char *kind,
                                           const char *method, int exploratory,
                                           char **json_out);

/* Decompose a Lie derivation as derivation + central-valued remainder.
 *   method: "coefficients" | "diagonal"
 * Requires a connected preorder and, for "coefficients", a 2-torsion-free
 * ring.  The operator must pass the Lie-derivation check; otherwise the
 * status is INCALG_ERROR_PRECONDITION and the message names a violating
 * basis pair.  On INCALG_OK, *all_flags_out receives 1 when every
 * verification flag in the report is true and 0 otherwise (the JSON always
 * carries the honest flags). */
INCALG_API incalg_status incalg_decompose_json(const char *preorder_json,
                                               const char *ring,
                                               const char *operator_json,
                                               const char *method,
                                               int *all_flags_out,
                                               char **json_out);

/* Run the full property-audit suite and return the report.  Never fails for
 * mathematical reasons: sections that need a solver field are skipped with a
 * note when the ring is not one, and findings are recorded in the report
 * rather than raised as errors. */
INCALG_API incalg_status incalg_audit_json(const char *preorder_json,
                                           const char *ring, long long trials,
                                           unsigned long long seed,
                                           int exploratory, char **json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* INCALG_H */
