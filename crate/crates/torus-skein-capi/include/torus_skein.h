#ifndef TORUS_SKEIN_H
#define TORUS_SKEIN_H

/* Generated from the torus-skein-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every API call.
typedef enum TsStatus {
  TS_STATUS_OK = 0,
  // A required pointer argument was null.
  TS_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  TS_STATUS_INVALID_UTF8 = 2,
  // The expression could not be parsed.
  TS_STATUS_SYNTAX_ERROR = 3,
  // The expression mixes atoms of different element kinds.
  TS_STATUS_KIND_MISMATCH = 4,
  // The noncommutative-torus element is not symmetric under
  // (p, q) -> (-p, -q), so it represents no skein element.
  TS_STATUS_NOT_SYMMETRIC = 5,
  // A curve class that must be primitive (gcd 1) was not.
  TS_STATUS_NOT_PRIMITIVE = 6,
  // The gluing matrix determinant is not -1.
  TS_STATUS_BAD_DETERMINANT = 7,
  // The gluing matrix has p < 1.
  TS_STATUS_UNSUPPORTED_GLUING = 8,
  // Division by a non-unit coefficient.
  TS_STATUS_NOT_A_UNIT = 9,
  // Numeric evaluation at t = 0.
  TS_STATUS_ZERO_EVALUATION_POINT = 10,
  // A Jones-Wenzl idempotent is undefined at the requested root of
  // unity.
  TS_STATUS_IDEMPOTENT_UNDEFINED = 11,
  // No (m, k) decomposition exists for a reduction step.
  TS_STATUS_NO_DECOMPOSITION = 12,
  // An internal invariant failed.
  TS_STATUS_INTERNAL_ERROR = 13,
} TsStatus;

// Opaque handle to a reduced lens-space element (coefficients over the
// spanning set 1 (x) a^k, k = 0 ... floor(p/2)).
typedef struct TsLens TsLens;

// Opaque handle to a noncommutative-torus element.
typedef struct TsNc TsNc;

// Opaque handle to a skein element of the torus.
typedef struct TsSkein TsSkein;

// Opaque handle to a solid-torus element (a polynomial in the core
// curve).
typedef struct TsSolid TsSolid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// A static, human-readable description of a status code. The returned
// string must not be freed.
const char *ts_status_message(enum TsStatus status);

// Frees a string returned by a `ts_*_format` function.
//
// # Safety
// `s` must be a pointer previously returned through a `ts_*_format`
// out-parameter (or null, in which case this is a no-op).
void ts_string_free(char *s);

// Parses a skein-kind expression (atoms `T(p,q)`, `P(d;p,q)`,
// `JW(n;p,q)`, scalars) into a new handle.
//
// # Safety
// `text` must point to a NUL-terminated string and `out` to a writable
// pointer slot. On success `*out` owns the element and must be
// released with `ts_skein_free`.
enum TsStatus ts_skein_parse(const char *text, struct TsSkein **out);

// Parses a noncommutative-torus expression (atoms `e(p,q)`, scalars).
//
// # Safety
// As for `ts_skein_parse`; release with `ts_nc_free`.
enum TsStatus ts_nc_parse(const char *text, struct TsNc **out);

// Parses a solid-torus expression (atoms `a(n)`, scalars).
//
// # Safety
// As for `ts_skein_parse`; release with `ts_solid_free`.
enum TsStatus ts_solid_parse(const char *text, struct TsSolid **out);

// Releases a skein handle.
//
// # Safety
// `e` must come from this library (or be null).
void ts_skein_free(struct TsSkein *e);

// Releases a noncommutative-torus handle.
//
// # Safety
// `e` must come from this library (or be null).
void ts_nc_free(struct TsNc *e);

// Releases a solid-torus handle.
//
// # Safety
// `e` must come from this library (or be null).
void ts_solid_free(struct TsSolid *e);

// Releases a lens-space handle.
//
// # Safety
// `e` must come from this library (or be null).
void ts_lens_free(struct TsLens *e);

// Renders a skein element canonically (text grammar, or JSON when
// `as_json` is set).
//
// # Safety
// `e` must be a live handle; `*out` receives a string to release with
// `ts_string_free`.
enum TsStatus ts_skein_format(const struct TsSkein *e, bool as_json, char **out);

// Renders a noncommutative-torus element canonically.
//
// # Safety
// As for `ts_skein_format`.
enum TsStatus ts_nc_format(const struct TsNc *e, bool as_json, char **out);

// Renders a solid-torus element canonically.
//
// # Safety
// As for `ts_skein_format`.
enum TsStatus ts_solid_format(const struct TsSolid *e, bool as_json, char **out);

// Renders a reduced lens-space element canonically.
//
// # Safety
// As for `ts_skein_format`.
enum TsStatus ts_lens_format(const struct TsLens *e, bool as_json, char **out);

// Multiplies two skein elements (product-to-sum rule).
//
// # Safety
// `a` and `b` must be live handles; `*out` receives a new handle.
enum TsStatus ts_skein_mul(const struct TsSkein *a, const struct TsSkein *b, struct TsSkein **out);

// Multiplies two noncommutative-torus elements.
//
// # Safety
// As for `ts_skein_mul`.
enum TsStatus ts_nc_mul(const struct TsNc *a, const struct TsNc *b, struct TsNc **out);

// Multiplies two solid-torus elements.
//
// # Safety
// As for `ts_skein_mul`.
enum TsStatus ts_solid_mul(const struct TsSolid *a, const struct TsSolid *b, struct TsSolid **out);

// Embeds a skein element into the noncommutative torus,
// (p,q) -> e_{p,q} + e_{-p,-q}.
//
// # Safety
// `a` must be a live handle; `*out` receives a new handle.
enum TsStatus ts_skein_embed(const struct TsSkein *a, struct TsNc **out);

// Recovers the skein element represented by a symmetric
// noncommutative-torus element; fails with `NotSymmetric` otherwise.
//
// # Safety
// `n` must be a live handle; `*out` receives a new handle on success.
enum TsStatus ts_nc_unembed(const struct TsNc *n, struct TsSkein **out);

// Projects a skein element of the torus to the solid-torus module.
//
// # Safety
// `a` must be a live handle; `*out` receives a new handle.
enum TsStatus ts_skein_project(const struct TsSkein *a, struct TsSolid **out);

// Acts by a skein element of the torus on a solid-torus element.
//
// # Safety
// `a` and `u` must be live handles; `*out` receives a new handle.
enum TsStatus ts_skein_act(const struct TsSkein *a, const struct TsSolid *u, struct TsSolid **out);

// Reduces a solid-torus element in the lens space glued by the matrix
// with columns (a, b) and (p, q) (determinant must be -1, p >= 1).
//
// # Safety
// `u` must be a live handle; `*out` receives a new handle on success.
enum TsStatus ts_lens_reduce(int64_t a,
                             int64_t b,
                             int64_t p,
                             int64_t q,
                             const struct TsSolid *u,
                             struct TsLens **out);

// Expands the n-th Jones-Wenzl idempotent threaded along the primitive
// curve (p, q) into the curve-class basis.
//
// # Safety
// `out` must point to a writable pointer slot; `*out` receives a new
// handle on success.
enum TsStatus ts_jw_expand(uint64_t n, int64_t p, int64_t q, struct TsSkein **out);

// The maximal geometric intersection number between the curve classes
// of two skein elements.
//
// # Safety
// `a` and `b` must be live handles; `*out` receives the number.
enum TsStatus ts_intersection_number(const struct TsSkein *a,
                                     const struct TsSkein *b,
                                     uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORUS_SKEIN_H */
