/* SPDX-License-Identifier: Apache-2.0 */

#ifndef TRICONTOUR_H
#define TRICONTOUR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum TcStatus {
  TC_STATUS_OK = 0,
  TC_STATUS_NULL_POINTER = 1,
  TC_STATUS_INVALID_ARGUMENT = 2,
  TC_STATUS_INSUFFICIENT_SAMPLES = 3,
  TC_STATUS_PARSE_ERROR = 4,
  TC_STATUS_DEGENERATE = 5,
  TC_STATUS_OVERFLOW = 6,
  TC_STATUS_PANIC = 7,
} TcStatus;

/**
 * Sparse Fourier spectrum.
 */
typedef struct TcSpectrum TcSpectrum;

typedef struct TcComplex {
  double re;
  double im;
} TcComplex;

/**
 * 0 circle, 1 strongly convex, 2 strictly convex, 3 self-intersecting.
 */
typedef struct TcShapeMetrics {
  double area;
  double perimeter;
  double iso_ratio;
  int32_t regime;
} TcShapeMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *tc_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void tc_string_free(char *s);

/**
 * Point γₐ(t) of the constant-width curve.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum TcStatus tc_gamma_point(double a, double t, struct TcComplex *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum TcStatus tc_shape_metrics(double a, struct TcShapeMetrics *out);

/**
 * Writes j₀ … j_{len−1} into `out`.
 *
 * # Safety
 * `out` must be valid for `len` writes.
 */
enum TcStatus tc_jacobsthal(double a, size_t len, double *out);

/**
 * Limiting ratio a + √(a² + a).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum TcStatus tc_growth_ratio(double a, double *out);

/**
 * Σ_{ℓ>n} jₗ.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum TcStatus tc_tail_sum(double a, size_t n, double *out);

/**
 * Empty spectrum. Never NULL.
 */
struct TcSpectrum *tc_spectrum_new(void);

/**
 * # Safety
 * `s` must be NULL or a handle from this library not yet freed.
 */
void tc_spectrum_free(struct TcSpectrum *s);

/**
 * Sets the amplitude at index `k` (zero removes the entry).
 *
 * # Safety
 * `s` must be a live handle.
 */
enum TcStatus tc_spectrum_set(struct TcSpectrum *s, int64_t k, struct TcComplex c);

/**
 * # Safety
 * `s` must be a live handle and `out` valid for writes.
 */
enum TcStatus tc_spectrum_get(const struct TcSpectrum *s, int64_t k, struct TcComplex *out);

/**
 * Number of nonzero terms; 0 for NULL.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
size_t tc_spectrum_len(const struct TcSpectrum *s);

/**
 * The `i`-th nonzero term in increasing index order.
 *
 * # Safety
 * `s` must be a live handle; `k` and `c` valid for writes.
 */
enum TcStatus tc_spectrum_term(const struct TcSpectrum *s,
                               size_t i,
                               int64_t *k,
                               struct TcComplex *c);

/**
 * Parses `[[k, re, im], …]`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` valid for writes.
 */
enum TcStatus tc_spectrum_from_json(const char *json, struct TcSpectrum **out);

/**
 * # Safety
 * `s` must be a live handle; `out` valid for writes. Free the result with [`tc_string_free`].
 */
enum TcStatus tc_spectrum_to_json(const struct TcSpectrum *s, char **out);

/**
 * Fourier coefficients |k| ≤ m of `n` equispaced samples.
 *
 * # Safety
 * `samples` must be valid for `n` reads; `out` valid for writes.
 */
enum TcStatus tc_analyze(const struct TcComplex *samples,
                         size_t n,
                         size_t m,
                         struct TcSpectrum **out);

/**
 * Evaluates the spectrum at `n` equispaced parameters into `out`.
 *
 * # Safety
 * `s` must be a live handle; `out` valid for `n` writes.
 */
enum TcStatus tc_synthesize(const struct TcSpectrum *s, size_t n, struct TcComplex *out);

/**
 * f + 2a f₋₂ − a f₄.
 *
 * # Safety
 * `s` must be a live handle; `out` valid for writes.
 */
enum TcStatus tc_apply_t(const struct TcSpectrum *s, double a, struct TcSpectrum **out);

/**
 * n-term inverse series Rₙ.
 *
 * # Safety
 * `s` must be a live handle; `out` valid for writes.
 */
enum TcStatus tc_apply_rn(const struct TcSpectrum *s, double a, size_t n, struct TcSpectrum **out);

/**
 * Constant-width coefficients c̃_k for |k| ≤ `max_index`.
 *
 * # Safety
 * `s` must be a live handle; `out` valid for writes.
 */
enum TcStatus tc_cw_coefficients(const struct TcSpectrum *s,
                                 double a,
                                 size_t n,
                                 size_t max_index,
                                 struct TcSpectrum **out);

/**
 * ⟨Rₙ f, Rₙ g⟩.
 *
 * # Safety
 * `f` and `g` must be live handles; `out` valid for writes.
 */
enum TcStatus tc_inner_product_r(const struct TcSpectrum *f,
                                 const struct TcSpectrum *g,
                                 double a,
                                 size_t n,
                                 struct TcComplex *out);

/**
 * Runs the glyph pipeline on SVG/CSV text and renders the result as SVG.
 *
 * `samples` is the output resolution per contour; it must exceed 2·2ⁿ·4m.
 *
 * # Safety
 * `input` must be a NUL-terminated string; `out_svg` valid for writes.
 * Free the result with [`tc_string_free`].
 */
enum TcStatus tc_transform_svg(const char *input,
                               double a,
                               size_t n,
                               size_t m,
                               size_t samples,
                               char **out_svg);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRICONTOUR_H */
