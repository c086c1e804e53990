#ifndef EPH_H
#define EPH_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define EPH_METHOD_DIRECT 0

#define EPH_METHOD_DECASTELJAU 1

#define EPH_METHOD_WOZNY_CHUDY 2

#define EPH_METHOD_NEW 3

#define EPH_MODE_AUTO 0

#define EPH_MODE_NAIVE 1

#define EPH_MODE_STABLE 2

#define EPH_MODE_TAYLOR 3

#define EPH_TAG_PP 0

#define EPH_TAG_PM 1

#define EPH_TAG_MP 2

#define EPH_TAG_MM 3

/**
 * Result codes.
 */
typedef enum EphStatus {
  EPH_STATUS_OK = 0,
  EPH_STATUS_NULL_POINTER = 1,
  EPH_STATUS_INVALID_ARGUMENT = 2,
  EPH_STATUS_DOMAIN = 3,
  EPH_STATUS_OVERFLOW_HAZARD = 4,
  EPH_STATUS_ZERO_VECTOR = 5,
  EPH_STATUS_DEGENERATE_DIRECTION = 6,
  EPH_STATUS_SINGULAR_CONTROL_BLOCK = 7,
  EPH_STATUS_BUFFER_TOO_SMALL = 8,
  EPH_STATUS_PANIC = 9,
} EphStatus;

/**
 * Opaque curve handle.
 */
typedef struct EphCurve EphCurve;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *eph_status_str(enum EphStatus status);

/**
 * Message of the last failure on this thread. Valid until the next failing
 * call on the same thread; empty if nothing failed yet.
 */
const char *eph_last_error(void);

/**
 * Curve of order `m` with `2m + 2` control points of dimension `dim`
 * (2 or 3), packed in `points`.
 *
 * # Safety
 * `points` must hold `n_values` doubles and `out` must be writable.
 */
enum EphStatus eph_curve_new(int m,
                             double omega,
                             size_t dim,
                             const double *points,
                             size_t n_values,
                             struct EphCurve **out);

/**
 * Curve from its JSON form `{"m", "omega", "dim", "control_points"}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum EphStatus eph_curve_from_json(const char *json, struct EphCurve **out);

/**
 * Writes the JSON form, NUL-terminated, into `buf`. `needed` receives the
 * required capacity including the NUL; with a short buffer nothing is
 * written and [`EphStatus::BufferTooSmall`] is returned.
 *
 * # Safety
 * `curve` must be a live handle, `buf` writable for `cap` bytes (may be null
 * when `cap` is 0), `needed` writable or null.
 */
enum EphStatus eph_curve_to_json(const struct EphCurve *curve,
                                 char *buf,
                                 size_t cap,
                                 size_t *needed);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `curve` must come from this library and not be used afterwards.
 */
void eph_curve_free(struct EphCurve *curve);

/**
 * Order m of the curve, 0 for a null handle.
 *
 * # Safety
 * `curve` must be a live handle or null.
 */
int eph_curve_order(const struct EphCurve *curve);

/**
 * # Safety
 * `curve` must be a live handle or null.
 */
size_t eph_curve_dim(const struct EphCurve *curve);

/**
 * # Safety
 * `curve` must be a live handle or null.
 */
double eph_curve_omega(const struct EphCurve *curve);

/**
 * Copies the `(2m + 2) * dim` control point coordinates into `out`.
 *
 * # Safety
 * `curve` must be a live handle and `out` writable for `cap` doubles.
 */
enum EphStatus eph_curve_control_points(const struct EphCurve *curve, double *out, size_t cap);

/**
 * `r(t)` into `out[0..dim]`.
 *
 * # Safety
 * `curve` must be a live handle and `out` writable for `dim` doubles.
 */
enum EphStatus eph_curve_eval(const struct EphCurve *curve,
                              double t,
                              int method_code,
                              int mode_code,
                              double *out);

/**
 * `r(k/(n-1))`, k = 0..n, packed into `out[0..n*dim]`.
 *
 * # Safety
 * `curve` must be a live handle and `out` writable for `n * dim` doubles.
 */
enum EphStatus eph_curve_eval_grid(const struct EphCurve *curve,
                                   size_t n,
                                   int method_code,
                                   int mode_code,
                                   double *out);

/**
 * `r'(t)` into `out[0..dim]`.
 *
 * # Safety
 * `curve` must be a live handle and `out` writable for `dim` doubles.
 */
enum EphStatus eph_curve_derivative(const struct EphCurve *curve, double t, double *out);

/**
 * The `2m + 2` values `Φ_{i,m}(t)` into `out`.
 *
 * # Safety
 * `out` must be writable for `2m + 2` doubles.
 */
enum EphStatus eph_basis_phi(int m, double omega, double t, int mode_code, double *out);

/**
 * Planar C¹ Hermite interpolant of order 2. All vectors have 2 entries; the
 * resulting curve has dim 2.
 *
 * # Safety
 * Every vector must hold 2 doubles and `out` must be writable.
 */
enum EphStatus eph_hermite_planar(const double *r0,
                                  const double *r_end,
                                  const double *di,
                                  const double *df,
                                  double omega,
                                  int tag_code,
                                  struct EphCurve **out);

/**
 * Spatial C¹ Hermite interpolant of order 2 with free angles
 * `eta0, eta1, eta2`. All vectors have 3 entries.
 *
 * # Safety
 * Every vector must hold 3 doubles and `out` must be writable.
 */
enum EphStatus eph_hermite_spatial(const double *r0,
                                   const double *r_end,
                                   const double *di,
                                   const double *df,
                                   double omega,
                                   double eta0,
                                   double eta1,
                                   double eta2,
                                   struct EphCurve **out);

/**
 * PH curve with hodograph `A i A*`, where the `m + 1` quaternion
 * coefficients of `A` are packed as `(w, x, y, z)` in `coeffs`, starting
 * at the point `r0` (3 entries).
 *
 * # Safety
 * `coeffs` must hold `4(m + 1)` doubles, `r0` 3 doubles, `out` writable.
 */
enum EphStatus eph_preimage_curve(int m,
                                  double omega,
                                  const double *coeffs,
                                  const double *r0,
                                  struct EphCurve **out);

/**
 * Arc length `s(t)` of the PH curve of the preimage, in closed form.
 *
 * # Safety
 * `coeffs` must hold `4(m + 1)` doubles and `out` be writable.
 */
enum EphStatus eph_preimage_arc_length(int m,
                                       double omega,
                                       const double *coeffs,
                                       double t,
                                       double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EPH_H */
