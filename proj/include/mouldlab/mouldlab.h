#ifndef MOULDLAB_H
#define MOULDLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MOULDLAB_API __declspec(dllexport)
#else
#define MOULDLAB_API __attribute__((visibility("default")))
#endif

typedef enum mouldlab_status {
    MOULDLAB_OK = 0,
    MOULDLAB_ERR_PARSE = 1,
    MOULDLAB_ERR_INVALID_ARGUMENT = 2,
    MOULDLAB_ERR_DOMAIN = 3,     // pole, non-homogeneous input, not in a span, ...
    MOULDLAB_ERR_NULL_POINTER = 4,
    MOULDLAB_ERR_INTERNAL = 5
} mouldlab_status;

// A mould component: an arity and a reduced rational function. Arity 0 is
// used for constants (the derivation of an arity-one component).
typedef struct mouldlab_expr mouldlab_expr;

MOULDLAB_API const char *mouldlab_version(void);
// Message of the last failed call on this thread ("" if none).
MOULDLAB_API const char *mouldlab_last_error(void);
// Strings returned through char ** outputs are owned by the caller.
MOULDLAB_API void mouldlab_string_free(char *s);

// --- expressions -----------------------------------------------------------

// arity <= 0 infers the arity from the highest u-index (at least 1).
MOULDLAB_API mouldlab_status mouldlab_expr_parse(const char *text, int arity, mouldlab_expr **out);
MOULDLAB_API void mouldlab_expr_free(mouldlab_expr *e);
MOULDLAB_API int mouldlab_expr_arity(const mouldlab_expr *e);
MOULDLAB_API mouldlab_status mouldlab_expr_to_string(const mouldlab_expr *e, char **out);
// {"arity": n, "expr": "..."}
MOULDLAB_API mouldlab_status mouldlab_expr_to_json(const mouldlab_expr *e, char **out);
MOULDLAB_API mouldlab_status mouldlab_expr_equal(const mouldlab_expr *a, const mouldlab_expr *b, int *out);
// assignment: comma-separated "var=value" pairs, e.g. "u1=1,u2=3/2,t=2".
// Unassigned variables stay symbolic; the result is printed in canonical form.
MOULDLAB_API mouldlab_status mouldlab_expr_evaluate(const mouldlab_expr *e, const char *assignment, char **out);

// --- operations ------------------------------------------------------------

MOULDLAB_API mouldlab_status mouldlab_compose(const mouldlab_expr *f, const mouldlab_expr *g, int i,
                                              mouldlab_expr **out);
// op: succ, prec, mu, limu, arrow, circ, over, under, arit, ari.
MOULDLAB_API mouldlab_status mouldlab_product(const char *op, const mouldlab_expr *f, const mouldlab_expr *g,
                                              mouldlab_expr **out);
MOULDLAB_API mouldlab_status mouldlab_push(const mouldlab_expr *f, mouldlab_expr **out);
MOULDLAB_API mouldlab_status mouldlab_derivation(const mouldlab_expr *f, mouldlab_expr **out);
// check: alternal, vegetal, homogeneous, nice-poles. *out is 1 or 0.
MOULDLAB_API mouldlab_status mouldlab_check(const char *check, const mouldlab_expr *f, int *out);

// --- trees -------------------------------------------------------------------
// Trees are written "L" / "(left,right)" (planar trees allow more children) or
// as JSON nested arrays with "L" leaves.

// JSON array of {"tree": "...", "json": [...]} for all binary trees of degree n.
MOULDLAB_API mouldlab_status mouldlab_trees_enumerate(int n, int planar, char **out);
MOULDLAB_API mouldlab_status mouldlab_tree_psi(const char *tree, mouldlab_expr **out);
// sigma: digits ("4163527") or comma-separated values. Writes the tree string.
MOULDLAB_API mouldlab_status mouldlab_tree_pi(const char *sigma, char **out);
// JSON object {tree-string: "p/q"}; MOULDLAB_ERR_DOMAIN when f is outside the span.
MOULDLAB_API mouldlab_status mouldlab_tree_expand(const mouldlab_expr *f, uint64_t seed, char **out);
// JSON {"degree", "trees", "covers": [[i, j], ...]} of the Tamari order.
MOULDLAB_API mouldlab_status mouldlab_tamari(int n, char **out);

// --- non-crossing plants ---------------------------------------------------
// Plants are JSON {"n": int, "denom": [[a,b],...], "numer": [[a,b],...]}.

MOULDLAB_API mouldlab_status mouldlab_plants_enumerate(int n, int based_only, char **out);
MOULDLAB_API mouldlab_status mouldlab_plants_count(int n, long long *plants, long long *based);
// JSON {"P": [...], "Q": [...]} coefficients 0..order of the counting series.
MOULDLAB_API mouldlab_status mouldlab_plants_series(int order, char **out);
// JSON {"plant": {...}, "psi": "..."}.
MOULDLAB_API mouldlab_status mouldlab_plants_graft(const char *f, const char *g, int i, char **out);
MOULDLAB_API mouldlab_status mouldlab_plant_psi(const char *plant, mouldlab_expr **out);
// JSON array of {"plant", "expansion", "multiplicity_free", "interval"}.
MOULDLAB_API mouldlab_status mouldlab_plants_conjecture(int n, char **out);

// --- gallery and series ------------------------------------------------------

// name: as, ty, pq, weighted, cm, po. t: rational text or NULL for formal t
// (ty, po). For pq, p is the root gap and n = p + q.
MOULDLAB_API mouldlab_status mouldlab_gallery(const char *name, int n, int p, const char *t, mouldlab_expr **out);
// Forgetful image of a gallery mould to the given order: JSON array of
// coefficient strings, index 0 first. t must be rational when given.
MOULDLAB_API mouldlab_status mouldlab_forgetful(const char *name, int order, const char *t, char **out);

// --- verification ------------------------------------------------------------

// group: operad, anticyclic, dend, tridend, ncp, derivation, ari, gallery, all.
// max_degree <= 0 keeps the default caps. *passed is 1 when every check held.
MOULDLAB_API mouldlab_status mouldlab_verify(const char *group, uint64_t seed, int max_degree, int json,
                                             char **report, int *passed);

#ifdef __cplusplus
}
#endif

#endif
