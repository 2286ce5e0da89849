/* detsurf - exact enumeration and invariants of determinantal surface
 * families in P^3, with a finite-field rank oracle.
 *
 * C interface to the shared library.  All functions return a status code;
 * results come back through out-parameters.  Objects behind opaque handles
 * must be released with the matching _free function.  On failure,
 * detsurf_last_error() returns a thread-local human-readable message.
 */
#ifndef DETSURF_H
#define DETSURF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  DETSURF_OK = 0,
  DETSURF_ERR_INVALID_ARGUMENT = 1, /* malformed input (bad pair, null pointer, bounds) */
  DETSURF_ERR_DOMAIN = 2,           /* mathematically out of range (bad modulus, Delta out of table) */
  DETSURF_ERR_OVERFLOW = 3,         /* checked 128-bit arithmetic overflowed */
  DETSURF_ERR_INTERNAL = 4,         /* an internal invariant failed; please report */
  DETSURF_ERR_FAILED = 5            /* operation could not complete (e.g. all samples degenerate) */
} detsurf_status;

const char* detsurf_version(void);
const char* detsurf_last_error(void);

/* ---- scalar helpers ---- */

detsurf_status detsurf_binom(int64_t n, int64_t k, int64_t* out);
detsurf_status detsurf_h0_twist(int64_t m, int64_t* out);

/* True (1) iff the length-t pair (a, b) has every matrix entry of degree >= 1. */
detsurf_status detsurf_pair_is_reduced(const int64_t* a, const int64_t* b, int64_t t, int32_t* out);

/* Dimension of the family det(a, b) inside |O(d)|; requires a reduced pair. */
detsurf_status detsurf_dim_det(const int64_t* a, const int64_t* b, int64_t t, int64_t* out);

/* ---- enumeration of families ---- */

#define DETSURF_ENUM_RAW_PAIRS 0x1u        /* keep unreduced pairs (inspection window) */
#define DETSURF_ENUM_NO_TRANSPOSE_DEDUP 0x2u /* do not merge transpose orbits */

typedef struct detsurf_classes detsurf_classes;

detsurf_status detsurf_classes_create(int64_t d, uint32_t flags, detsurf_classes** out);
void detsurf_classes_free(detsurf_classes* cls);
int64_t detsurf_classes_count(const detsurf_classes* cls);
/* Length t of class `index`, or -1 if out of range. */
int64_t detsurf_class_length(const detsurf_classes* cls, int64_t index);
/* Number of normalized pairs in the orbit (1 or 2), or -1. */
int64_t detsurf_class_member_count(const detsurf_classes* cls, int64_t index);
/* Copies member `member` of class `index` into a[0..t), b[0..t); capacity is
 * the size of each buffer.  Member 0 is the canonical representative. */
detsurf_status detsurf_class_member(const detsurf_classes* cls, int64_t index, int64_t member,
                                    int64_t* a, int64_t* b, int64_t capacity);

/* ---- per-family invariants ---- */

#define DETSURF_CLASS_WHOLE_SPACE 0
#define DETSURF_CLASS_GENERAL 1
#define DETSURF_CLASS_SPECIAL 2

typedef struct {
  int64_t d, t;
  int64_t curve_degree;   /* d_C */
  int64_t curve_genus;    /* g_C */
  int64_t h1_od;          /* h^1(O_C(d)) */
  int64_t kappa;          /* binom(d-1,3) - codim */
  int64_t h1_normal;      /* h^1 of the normal sheaf */
  int64_t hilbert_dim;    /* dimension of the family of curves */
  int64_t h0_oxc;         /* h^0(X, O_X(C)) */
  int64_t dim;            /* dim det(a, b) */
  int64_t codim;          /* inside |O(d)| */
  int32_t classification; /* DETSURF_CLASS_* */
} detsurf_report;

/* Report for the representative of class `index`. */
detsurf_status detsurf_class_report(const detsurf_classes* cls, int64_t index, detsurf_report* out);
/* Report for an arbitrary reduced pair. */
detsurf_status detsurf_pair_report(const int64_t* a, const int64_t* b, int64_t t, detsurf_report* out);

/* ---- codimension table ---- */

/* Sorted codimension multiset of degree d (whole-space families collapsed to
 * a single 0).  On entry *count holds the capacity of codims; on success it
 * holds the number of entries written.  Pass codims = NULL to query the
 * required size through *count. */
detsurf_status detsurf_table_row(int64_t d, int64_t* codims, int64_t* count);
/* The same row as text, e.g. "5  2, 3, 6:4  8".  Free with detsurf_string_free. */
detsurf_status detsurf_table_row_text(int64_t d, char** out);
void detsurf_string_free(char* s);

/* ---- quartic divisor degrees ---- */

typedef struct {
  int64_t t;
  int64_t a[4], b[4]; /* normalized so a[0] = 5; first t entries valid */
  int64_t curve_degree, curve_genus;
  int64_t disc;  /* Delta = d_C^2 - 8 g_C + 8 */
  int64_t coset; /* delta = d_C mod 4, canonicalized to {0,1,2} */
  int64_t degree;
} detsurf_quartic;

/* The five divisors of determinantal quartics, in canonical order. */
detsurf_status detsurf_quartic_degrees(detsurf_quartic out[5]);

/* ---- lattice arithmetic ---- */

detsurf_status detsurf_delta_of(int64_t h, int64_t d, int64_t* out);
int64_t detsurf_canonical_coset(int64_t d);
/* mu(h, d | disc, coset), always 0, 1 or 2. */
detsurf_status detsurf_mu(int64_t h, int64_t d, int64_t disc, int64_t coset, int64_t* out);
/* Noether-Lefschetz number NL_{h,d}; tabulated for 0 < Delta(h,d) <= 20. */
detsurf_status detsurf_nl_number(int64_t h, int64_t d, int64_t* out);
/* Degree of P_{disc,coset} computed from a witness (h, d) with those invariants. */
detsurf_status detsurf_degree_p(int64_t disc, int64_t coset, int64_t witness_h, int64_t witness_d, int64_t* out);

/* ---- extremal bounds sweep ---- */

typedef struct {
  int64_t d, t;
  int64_t min_dim, max_dim; /* dims of the extremal pairs of this (d, t) */
  int64_t num_pairs;        /* shift-normalized reduced pairs */
  int64_t num_classes;      /* transpose orbits */
  int64_t violations;       /* pairs with dim outside [min_dim, max_dim] */
  int32_t closed_forms_ok;  /* extremal dims match their closed forms */
} detsurf_sweep_cell;

typedef struct detsurf_sweep detsurf_sweep;

detsurf_status detsurf_sweep_run(int64_t d_max, detsurf_sweep** out);
void detsurf_sweep_free(detsurf_sweep* sweep);
int64_t detsurf_sweep_count(const detsurf_sweep* sweep);
detsurf_status detsurf_sweep_cell_get(const detsurf_sweep* sweep, int64_t index, detsurf_sweep_cell* out);
/* 1 iff every cell has no violations and all closed forms match. */
int32_t detsurf_sweep_all_pass(const detsurf_sweep* sweep);
/* First violating pair of cell `index`, if any (status DETSURF_ERR_FAILED when none). */
detsurf_status detsurf_sweep_counterexample(const detsurf_sweep* sweep, int64_t index,
                                            int64_t* a, int64_t* b, int64_t capacity);

/* ---- finite-field oracle ---- */

/* Rank of the derivative of det at a seeded random matrix of type (a, b);
 * rank - 1 equals dim det(a, b) up to sampling noise.  Requires a reduced
 * pair with t <= 8 and binom(d+3,3) <= 10^4, and an odd prime modulus < 2^31. */
detsurf_status detsurf_jacobian_rank(const int64_t* a, const int64_t* b, int64_t t,
                                     int64_t modulus, uint64_t seed, int64_t* rank);

/* Verifies det of the structured matrix equals x^d + y^d + z^d + w^d.
 * Requires an odd prime modulus = 1 mod 2d. */
detsurf_status detsurf_fermat_check(const int64_t* a, const int64_t* b, int64_t t,
                                    int64_t modulus, int32_t* ok);
/* Least prime > 10^4 congruent to 1 mod 2d. */
detsurf_status detsurf_default_fermat_modulus(int64_t d, int64_t* modulus);

#ifdef __cplusplus
}
#endif

#endif /* DETSURF_H */
