#ifndef HONG_LOEWY_H
#define HONG_LOEWY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum HlStatus {
  HlStatus_Ok = 0,
  /**
   * A precondition on the arguments was violated.
   */
  HlStatus_InvalidArgument = 1,
  /**
   * The computation size exceeds a configured cap.
   */
  HlStatus_Refused = 2,
  /**
   * A null pointer was passed where a value was required.
   */
  HlStatus_NullPointer = 3,
  /**
   * Unexpected internal failure; see `hl_last_error_message`.
   */
  HlStatus_Internal = 4,
} HlStatus;

/**
 * Opaque handle to a certified `c_n` enclosure.
 */
typedef struct HlCnResult HlCnResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or NULL. The string
 * must be freed with `hl_string_free`.
 */
char *hl_last_error_message(void);

/**
 * Free a string allocated by this library. NULL is ignored.
 *
 * # Safety
 * `s` must have been returned by a function from this library and not
 * freed before.
 */
void hl_string_free(char *s);

/**
 * Compute a certified enclosure of `c_n` with relative width `10^-digits`.
 * On success writes a handle that must be freed with `hl_cn_free`.
 */
enum HlStatus hl_cn_compute(uint32_t n, uint32_t digits, struct HlCnResult **out);

/**
 * # Safety
 * `h` must come from `hl_cn_compute` and not be freed twice.
 */
void hl_cn_free(struct HlCnResult *h);

/**
 * Lower enclosure endpoint as an exact rational string "p/q".
 *
 * # Safety
 * `h` must be a live handle from `hl_cn_compute`.
 */
char *hl_cn_lo_str(const struct HlCnResult *h);

/**
 * Upper enclosure endpoint as an exact rational string "p/q".
 *
 * # Safety
 * `h` must be a live handle from `hl_cn_compute`.
 */
char *hl_cn_hi_str(const struct HlCnResult *h);

/**
 * Correctly rounded decimal rendering with `frac_digits` digits after the
 * point, or NULL if the enclosure is too wide for that rounding.
 *
 * # Safety
 * `h` must be a live handle from `hl_cn_compute`.
 */
char *hl_cn_decimal(const struct HlCnResult *h, uint32_t frac_digits);

/**
 * The table document (CSV, LF line endings) for `n` in `[from, to]`.
 */
enum HlStatus hl_table1_csv(uint32_t from,
                            uint32_t to,
                            uint32_t digits,
                            uint32_t precision_bits,
                            char **out);

/**
 * Error-figure data with fitted slopes (CSV).
 */
enum HlStatus hl_figures_csv(uint32_t from,
                             uint32_t to,
                             uint32_t digits,
                             uint32_t precision_bits,
                             char **out);

/**
 * One bounds row as a JSON document.
 */
enum HlStatus hl_bounds_json(uint32_t n,
                             uint32_t digits,
                             uint32_t precision_bits,
                             bool strict_variant,
                             char **out);

/**
 * Exact coefficients of `p_n`, comma-separated decimal, ascending degree.
 */
enum HlStatus hl_charpoly_coeffs(uint32_t n, char **out);

/**
 * Brute-force scan of `K_n`. Writes the certified decimal value (at
 * `digits` relative digits) and the argmin bitmask.
 *
 * # Safety
 * `out_argmin_bits` and `out_decimal` must be valid for writes.
 */
enum HlStatus hl_oracle_scan(uint32_t n,
                             uint32_t digits,
                             uint64_t shards,
                             bool allow_large,
                             uint64_t *out_argmin_bits,
                             char **out_decimal);

/**
 * Divisor-lattice bound check over `{1..n}` with the identity weight.
 * Writes 1 into `out_holds` when the certified bound holds.
 */
enum HlStatus hl_lattice_bound_holds(uint64_t n,
                                     uint32_t digits,
                                     uint32_t precision_bits,
                                     bool *out_holds);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HONG_LOEWY_H */
