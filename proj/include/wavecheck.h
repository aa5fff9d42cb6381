/* C interface to the identity-check library. All functions are
 * thread-compatible: call them from any single thread at a time per
 * returned object; the error message store is thread-local.
 *
 * Strings returned through an out-parameter are heap-allocated and owned
 * by the caller; release them with wck_string_free. */

#ifndef WAVECHECK_H
#define WAVECHECK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WCK_OK = 0,
  WCK_INVALID_ARGUMENT = 1,
  WCK_DOMAIN = 2,
  WCK_DIVERGENCE = 3,
  WCK_SINGULARITY = 4,
  WCK_POLE = 5,
  WCK_RESOURCE = 6,
  WCK_CONVERGENCE = 7,
  WCK_INTERNAL = 8
} wck_status;

/* Aggregate outcome of a batch of checks, in exit-code convention:
 * 0 every check passed, 1 at least one failed, 2 none failed but at
 * least one was inconclusive (a tail estimate exceeded the tolerance). */
typedef enum {
  WCK_ALL_PASS = 0,
  WCK_ANY_FAIL = 1,
  WCK_ANY_INCONCLUSIVE = 2
} wck_outcome;

/* Library version, static storage. */
const char* wck_version(void);

/* Message for the most recent failing call on this thread, or "" if the
 * last call succeeded. Static storage, overwritten by the next failure. */
const char* wck_last_error(void);

void wck_string_free(char* s);

/* JSON array [{"id": ..., "summary": ...}, ...] of the available checks. */
wck_status wck_registry_json(char** out_json);

/* Run every check configured in `config_text` (INI-like: "[check <id>]"
 * sections followed by key=value settings). On success *out_json holds the
 * full report document and *out_outcome the aggregate verdict. */
wck_status wck_run_config_text(const char* config_text, char** out_json,
                               int* out_outcome);

/* Run one check by id with `n` key=value overrides applied on top of its
 * defaults. Keys are either reserved knobs (tolerance, group_bound,
 * series_kmax, tail_tolerance, tail_policy, abs_tol, rel_tol, max_panels,
 * panel_order) or check parameters; parameter values are complex literals
 * such as "2", "-1.5", "i", "1+2i". */
wck_status wck_run_single(const char* check_id, const char* const* keys,
                          const char* const* values, size_t n,
                          char** out_json, int* out_outcome);

/* Sample a named field over a rectangle in the upper half-plane and return
 * CSV (columns x,y,re,im,tail_estimate). `keys`/`values` override the
 * field's parameters or the evaluation knobs group_bound, series_kmax,
 * abs_tol, rel_tol, max_panels, panel_order. */
wck_status wck_grid_csv(const char* fn, double xmin, double xmax, double ymin,
                        double ymax, int nx, int ny, const char* const* keys,
                        const char* const* values, size_t n, char** out_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WAVECHECK_H */
