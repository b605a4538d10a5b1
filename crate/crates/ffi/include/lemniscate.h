#ifndef LEMNISCATE_H
#define LEMNISCATE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum LemnStatus {
  LEMN_STATUS_OK = 0,
  // A required pointer argument was null.
  LEMN_STATUS_NULL_ARGUMENT = 1,
  // The requested precision is below the supported minimum.
  LEMN_STATUS_PRECISION = 2,
  // An argument is outside the domain of the operation.
  LEMN_STATUS_DOMAIN = 3,
  // The operation hit a singular or degenerate configuration.
  LEMN_STATUS_SINGULAR = 4,
  // The polygon order is not constructible with ruler and compass.
  LEMN_STATUS_NOT_CONSTRUCTIBLE = 5,
  // Internal cross-checks disagree.
  LEMN_STATUS_CONSISTENCY = 6,
  // An index is out of range.
  LEMN_STATUS_OUT_OF_RANGE = 7,
  // A string argument is not valid UTF-8, or a trace is malformed.
  LEMN_STATUS_PARSE = 8,
  // A panic was caught at the boundary.
  LEMN_STATUS_INTERNAL = 99,
} LemnStatus;

// Working precision and the curve evaluator.
typedef struct LemnContext LemnContext;

// Result of a polygon run: the scene, the vertices and the certificate.
typedef struct LemnRun LemnRun;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failing call on this thread (empty if none). The
// pointer stays valid until the next failing call on the same thread.
const char *lemn_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and must not be used afterwards.
void lemn_string_free(char *s);

// Creates a context working at `digits` significant digits.
//
// # Safety
// `out` must be a valid pointer to writable storage for a handle.
enum LemnStatus lemn_context_new(uint32_t digits, struct LemnContext **out);

// Releases a context. Null is ignored.
//
// # Safety
// `ctx` must come from [`lemn_context_new`] and must not be used afterwards.
void lemn_context_free(struct LemnContext *ctx);

// The half period `omega` as a decimal string at full precision.
//
// # Safety
// `ctx` must be a live context and `out` valid for writes.
enum LemnStatus lemn_omega(const struct LemnContext *ctx, char **out);

// Arc length from the origin to radius `r` in `[0, 1]`, in double precision.
//
// # Safety
// `ctx` must be a live context and `out` valid for writes.
enum LemnStatus lemn_arc_length(const struct LemnContext *ctx, double r, double *out);

// The lemniscatic sine of the arc parameter `s`, in double precision.
//
// # Safety
// `ctx` must be a live context and `out` valid for writes.
enum LemnStatus lemn_lemniscate_sine(const struct LemnContext *ctx, double s, double *out);

// 1 if the regular `n`-gon on the curve is constructible, 0 otherwise.
int32_t lemn_constructible(uint64_t n);

// Builds the regular `n`-gon. With `numeric` nonzero the vertices are
// evaluated directly; otherwise they are constructed with ruler and compass.
//
// # Safety
// `ctx` must be a live context and `out` valid for writes.
enum LemnStatus lemn_ngon(const struct LemnContext *ctx,
                          uint64_t n,
                          int32_t numeric,
                          struct LemnRun **out);

// Releases a run. Null is ignored.
//
// # Safety
// `run` must come from this library and must not be used afterwards.
void lemn_run_free(struct LemnRun *run);

// Number of polygon vertices in the run (0 for a null handle).
//
// # Safety
// `run` must be null or a live run.
uintptr_t lemn_run_vertex_count(const struct LemnRun *run);

// Cartesian coordinates of vertex `k`, in double precision.
//
// # Safety
// `run` must be a live run; `x` and `y` valid for writes.
enum LemnStatus lemn_run_vertex(const struct LemnRun *run, uintptr_t k, double *x, double *y);

// Whether every certificate check of the run is within tolerance (1 or 0),
// and the largest error seen.
//
// # Safety
// `run` must be a live run; `passes` and `max_error` valid for writes.
enum LemnStatus lemn_run_certificate(const struct LemnRun *run, int32_t *passes, double *max_error);

// Number of construction steps and of imported points in the run's scene.
//
// # Safety
// `run` must be a live run; the out-pointers valid for writes.
enum LemnStatus lemn_run_audit(const struct LemnRun *run,
                               int32_t *passed,
                               uintptr_t *steps,
                               uintptr_t *input_points);

// Warnings raised while planning the run, one per line.
//
// # Safety
// `run` must be a live run and `out` valid for writes.
enum LemnStatus lemn_run_warnings(const struct LemnRun *run, char **out);

// The JSON trace of the run's construction.
//
// # Safety
// `run` must be a live run and `out` valid for writes.
enum LemnStatus lemn_run_trace_json(const struct LemnRun *run, char **out);

// An SVG figure of the run.
//
// # Safety
// `run` must be a live run and `out` valid for writes.
enum LemnStatus lemn_run_svg(const struct LemnRun *run, char **out);

// Replays a JSON trace; succeeds only if every coordinate is reproduced
// exactly. Writes the number of replayed steps.
//
// # Safety
// `json` must be a nul-terminated string and `steps` valid for writes.
enum LemnStatus lemn_replay_trace(const char *json, uintptr_t *steps);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEMNISCATE_H */
