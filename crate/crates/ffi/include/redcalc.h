#ifndef REDCALC_H
#define REDCALC_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RedcalcGroup {
  REDCALC_GROUP_SP = 0,
  REDCALC_GROUP_SO_ODD = 1,
  REDCALC_GROUP_O_EVEN = 2,
} RedcalcGroup;

/**
 * Status codes. Values 1 and 2 mirror the command-line exit codes.
 */
typedef enum RedcalcStatus {
  REDCALC_STATUS_OK = 0,
  /**
   * Malformed or invalid input.
   */
  REDCALC_STATUS_INVALID = 1,
  /**
   * Well-formed input that no cuspidal representation can have.
   */
  REDCALC_STATUS_INADMISSIBLE = 2,
  REDCALC_STATUS_NULL_POINTER = 3,
  REDCALC_STATUS_INVALID_UTF8 = 4,
  REDCALC_STATUS_PANIC = 5,
} RedcalcStatus;

/**
 * Opaque session handle.
 */
typedef struct RedcalcSession RedcalcSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a symbol table and a parameter and validates the parameter.
 *
 * On success `*out` receives a handle to release with
 * [`redcalc_session_free`]. Structural violations of the parameter do not
 * fail the load; commands that need a valid parameter report them.
 *
 * # Safety
 * `table_text` and `param_text` must be NUL-terminated strings; `out` must
 * be a valid pointer.
 */
enum RedcalcStatus redcalc_session_load(const char *table_text,
                                        const char *param_text,
                                        enum RedcalcGroup group,
                                        uint32_t n,
                                        bool so_irreducible,
                                        struct RedcalcSession **out);

/**
 * Releases a session. Null is ignored.
 *
 * # Safety
 * `session` must be null or a handle from [`redcalc_session_load`] not yet freed.
 */
void redcalc_session_free(struct RedcalcSession *session);

/**
 * Runs one command, e.g. `{"red", "--rho", "rho"}`.
 *
 * `input` (nullable) plays the role of standard input for `reconstruct`.
 * `*out_text` receives the report, to release with [`redcalc_string_free`],
 * even when the command fails. `*exit_code` receives the command-line exit
 * code. The status is `Ok` exactly when the exit code is 0.
 *
 * # Safety
 * `session` must be a live handle; `argv` must point to `argc` NUL-terminated
 * strings; `out_text` and `exit_code` must be valid pointers.
 */
enum RedcalcStatus redcalc_run(const struct RedcalcSession *session,
                               const char *const *argv,
                               size_t argc,
                               const char *input,
                               char **out_text,
                               int32_t *exit_code);

/**
 * Releases a string returned by [`redcalc_run`]. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from [`redcalc_run`] not yet freed.
 */
void redcalc_string_free(char *s);

/**
 * Message describing the last failure on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *redcalc_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REDCALC_H */
