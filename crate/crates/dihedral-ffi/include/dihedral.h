/* C interface to the dihedral exact-computation library. */

#ifndef DIHEDRAL_H
#define DIHEDRAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes for every fallible entry point.
typedef enum DhStatus {
  DhStatus_Ok = 0,
  DhStatus_NullArgument = 1,
  DhStatus_InvalidArgument = 2,
  DhStatus_VerificationFailed = 3,
  DhStatus_InternalError = 4,
} DhStatus;

// Opaque handle to an exact symbolic polynomial.
typedef struct DhPoly DhPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// V(z^a zbar^b) for the group selected by s >= 1.
enum DhStatus dh_intertwine(uint32_t s, uint32_t a, uint32_t b, struct DhPoly **out);

// The degree-n harmonic family member; variant is "f", "f0" or "f1".
//
// # Safety
// `variant` must be a valid NUL-terminated string or NULL.
enum DhStatus dh_harmonic(uint32_t n, const char *variant, struct DhPoly **out);

// The Poisson kernel component P_N(z, w).
enum DhStatus dh_poisson(uint32_t s, uint32_t big_n, struct DhPoly **out);

// The kernel K_n(z, w).
enum DhStatus dh_kernel(uint32_t s, uint32_t n, struct DhPoly **out);

// Number of stored (nonzero) terms.
//
// # Safety
// `poly` must be a live handle from this library or NULL.
uintptr_t dh_poly_num_terms(const struct DhPoly *poly);

// JSON term-list encoding (the CLI wire format). Free with dh_string_free.
//
// # Safety
// `poly` must be a live handle from this library or NULL.
char *dh_poly_to_json(const struct DhPoly *poly);

// Plain-text rendering. Free with dh_string_free.
//
// # Safety
// `poly` must be a live handle from this library or NULL.
char *dh_poly_to_text(const struct DhPoly *poly);

// Release a polynomial handle. NULL is ignored.
//
// # Safety
// `poly` must be a pointer previously returned by this library and not
// yet freed.
void dh_poly_free(struct DhPoly *poly);

// Release a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be a pointer previously returned by this library and not yet
// freed.
void dh_string_free(char *s);

// Run a verification suite ("defining", "oracle", "identities",
// "singular" or "all"). `max_degree < 0` selects the suite default.
// Writes the number of failed checks through `failures` when non-NULL.
//
// # Safety
// `suite` must be a valid NUL-terminated string or NULL.
enum DhStatus dh_verify(const char *suite, int32_t max_degree, uint64_t seed, uint64_t *failures);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIHEDRAL_H */
