#ifndef AFFDEM_AFFDEM_H
#define AFFDEM_AFFDEM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define AFFDEM_API __declspec(dllexport)
#else
#define AFFDEM_API __attribute__((visibility("default")))
#endif

typedef enum affdem_status {
  AFFDEM_OK = 0,
  AFFDEM_INVALID_ARGUMENT = 1,
  AFFDEM_DOMAIN = 2,
  AFFDEM_PARSE = 3,
  AFFDEM_INTERNAL = 4
} affdem_status;

/* Outcome of affdem_order_leq. */
typedef enum affdem_order_result {
  AFFDEM_NOT_LEQ = 0,
  AFFDEM_LEQ = 1,
  AFFDEM_INCONCLUSIVE = 2
} affdem_order_result;

typedef struct affdem_group affdem_group;
typedef struct affdem_elt affdem_elt;
typedef struct affdem_polytope affdem_polytope;

/*
  Conventions:
  - Every function returning affdem_status leaves outputs untouched on error
    and records a message readable through affdem_last_error on the same
    thread.
  - Strings returned through char** are owned by the caller and released with
    affdem_string_free.
  - kind is one of std, opp, semi, twisted (long forms accepted); eta is a
    coweight in JSON or shorthand ("-Lv1-Lv3") and may be NULL for regular
    kinds.
  - Weights use JSON or shorthand ("L0+L1").  Elements use word text
    ("2,1,0", "e", "0,1:inv") or JSON.
*/

AFFDEM_API const char* affdem_last_error(void);
AFFDEM_API const char* affdem_version(void);
AFFDEM_API void affdem_string_free(char* s);

/* Affine Weyl group of an untwisted affine type: "A2", "A2affine", "G2". */
AFFDEM_API affdem_status affdem_group_create(const char* type, affdem_group** out);
AFFDEM_API void affdem_group_free(affdem_group* group);
AFFDEM_API affdem_status affdem_group_info_json(const affdem_group* group, char** out);

AFFDEM_API affdem_status affdem_elt_parse(const affdem_group* group, const char* text, affdem_elt** out);
AFFDEM_API void affdem_elt_free(affdem_elt* elt);
/* Canonical word text, "e" for the identity. */
AFFDEM_API affdem_status affdem_elt_word(const affdem_elt* elt, char** out);
/* {"word": [...], "fin_matrix": [[...]], "xi": [...]}. */
AFFDEM_API affdem_status affdem_elt_json(const affdem_elt* elt, char** out);
AFFDEM_API affdem_status affdem_elt_multiply(const affdem_elt* a, const affdem_elt* b, affdem_elt** out);
AFFDEM_API affdem_status affdem_elt_inverse(const affdem_elt* elt, affdem_elt** out);
AFFDEM_API affdem_status affdem_elt_equal(const affdem_elt* a, const affdem_elt* b, int* out);
AFFDEM_API affdem_status affdem_elt_length(const affdem_elt* elt, const char* kind, const char* eta, int64_t* out);

/* Twisted kinds are answered by a bounded chain search and may report
   AFFDEM_INCONCLUSIVE. */
AFFDEM_API affdem_status affdem_order_leq(const char* kind, const char* eta, const affdem_elt* x,
                                          const affdem_elt* y, affdem_order_result* out);
/* Hasse diagram on all elements of standard length at most max_len; format
   is "dot" or "json". */
AFFDEM_API affdem_status affdem_order_hasse(const affdem_group* group, const char* kind, const char* eta,
                                            int max_len, const char* format, char** out);

/* w *_kind v and the unique x0 in [e, w] with product = x0 v. */
AFFDEM_API affdem_status affdem_demazure(const char* kind, const char* eta, const affdem_elt* w,
                                         const affdem_elt* v, affdem_elt** product, affdem_elt** x0);

AFFDEM_API affdem_status affdem_eta_classify(const affdem_group* group, const char* eta, char** out);
AFFDEM_API affdem_status affdem_eta_factorize(const affdem_group* group, const char* eta, const affdem_elt* w,
                                              char** out);

AFFDEM_API affdem_status affdem_polytope_create(const char* lambda, const affdem_elt* w, affdem_polytope** out);
AFFDEM_API void affdem_polytope_free(affdem_polytope* poly);
AFFDEM_API affdem_status affdem_polytope_vertices(const affdem_polytope* poly, char** out);
AFFDEM_API affdem_status affdem_polytope_inequalities(const affdem_polytope* poly, int max_length, char** out);
AFFDEM_API affdem_status affdem_polytope_contains(const affdem_polytope* poly, const char* mu, int* out);
AFFDEM_API affdem_status affdem_polytope_face(const affdem_polytope* poly, const char* eta, const affdem_elt* v,
                                              char** out);
AFFDEM_API affdem_status affdem_polytope_faces_dot(const affdem_polytope* poly, const char* eta, int max_length,
                                                   char** out);

/*
  Face grid.  config is a JSON object with optional keys
    "max_len" (all w up to this length, default 3),
    "random": {"count", "max_len", "seed"} (replaces max_len),
    "v_max_len" (default 3), "threads" (default 0 = hardware),
    "weights" and "coweights" (lists of JSON or shorthand).
  The result lists cell counts and failures.
*/
AFFDEM_API affdem_status affdem_grid(const affdem_group* group, const char* config, char** out);

#ifdef __cplusplus
}
#endif

#endif /* AFFDEM_AFFDEM_H */
