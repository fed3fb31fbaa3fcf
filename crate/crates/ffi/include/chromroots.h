#ifndef CHROMROOTS_H
#define CHROMROOTS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum CrStatus {
  CR_STATUS_OK = 0,
  CR_STATUS_NULL_POINTER = 1,
  CR_STATUS_INVALID_UTF8 = 2,
  CR_STATUS_PARSE = 3,
  CR_STATUS_DOMAIN = 4,
  CR_STATUS_PANIC = 5,
} CrStatus;

// Opaque simple graph.
typedef struct CrGraph CrGraph;

// Opaque integer polynomial.
typedef struct CrPoly CrPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or null. Owned by the
// library.
const char *cr_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void cr_string_free(char *s);

// Parse a polynomial such as `"x^2 - 7x + 11"`.
//
// # Safety
// `text_in` must be a nul-terminated string; `out` must be writable.
enum CrStatus cr_poly_parse(const char *text_in, struct CrPoly **out);

// Polynomial from `len` coefficients, lowest degree first.
//
// # Safety
// `coeffs` must point to `len` readable values; `out` must be writable.
enum CrStatus cr_poly_from_coeffs(const int64_t *coeffs, size_t len, struct CrPoly **out);

// # Safety
// `p` must be null or a handle from this library, not yet freed.
void cr_poly_free(struct CrPoly *p);

// Degree, or -1 for the zero polynomial or a null handle.
//
// # Safety
// `p` must be null or a live handle.
int64_t cr_poly_degree(const struct CrPoly *p);

// Canonical text in variable `var` (`'x'` or `'q'`).
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum CrStatus cr_poly_format(const struct CrPoly *p, char var, char **out);

// `a * b`.
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum CrStatus cr_poly_mul(const struct CrPoly *a, const struct CrPoly *b, struct CrPoly **out);

// Standard form of a monic polynomial; the shift `a` with
// `standard(x) = p(x + a)` is written as decimal text.
//
// # Safety
// `p` must be a live handle; `out_std` and `out_shift` must be writable.
enum CrStatus cr_poly_standardize(const struct CrPoly *p,
                                  struct CrPoly **out_std,
                                  char **out_shift);

// Factorization over the integers as JSON:
// `{"content":"c","factors":[{"poly":"...","mult":m},...]}`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum CrStatus cr_poly_factor_json(const struct CrPoly *p, char **out);

// Writes 1 if `p` is irreducible over the rationals, else 0.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum CrStatus cr_poly_is_irreducible(const struct CrPoly *p, int32_t *out);

// Galois group of an irreducible polynomial as JSON (name, order,
// method, samples, ambiguous_with).
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum CrStatus cr_poly_galois_json(const struct CrPoly *p, size_t samples, char **out);

// Interesting factor of the ring `R(1, a_1, ..., a_len)`, in `q`.
//
// # Safety
// `sizes` must point to `len` readable values; `out` must be writable.
enum CrStatus cr_ring_interesting_factor(const size_t *sizes, size_t len, struct CrPoly **out);

// Closed-form chromatic polynomial (`full != 0`) or interesting factor of
// a family given as text, e.g. `"ring:1,1,1,5"`, `"theta:3,2"`,
// `"biclique:7:0,1;2,3;4,5,6"`.
//
// # Safety
// `spec` must be a nul-terminated string; `out` must be writable.
enum CrStatus cr_family_polynomial(const char *spec, int32_t full, struct CrPoly **out);

// Parse a graph: vertex count on the first line, then `u v` per edge.
//
// # Safety
// `text_in` must be a nul-terminated string; `out` must be writable.
enum CrStatus cr_graph_parse(const char *text_in, struct CrGraph **out);

// # Safety
// `g` must be null or a handle from this library, not yet freed.
void cr_graph_free(struct CrGraph *g);

// Chromatic polynomial by deletion-contraction, in `q`.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum CrStatus cr_graph_chromatic(const struct CrGraph *g, struct CrPoly **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHROMROOTS_H */
