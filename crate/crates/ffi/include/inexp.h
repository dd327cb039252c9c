#ifndef INEXP_H
#define INEXP_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes.
typedef enum InexpStatus {
  INEXP_STATUS_OK = 0,
  // A required pointer argument was null.
  INEXP_STATUS_NULL_ARG = 1,
  // A generator or variable name did not parse.
  INEXP_STATUS_PARSE = 2,
  // Arguments were well-formed but violate a precondition.
  INEXP_STATUS_INVALID_INPUT = 3,
  // No normalizing coordinate change was found.
  INEXP_STATUS_NOT_CERTIFIED = 4,
  // A consistency check failed.
  INEXP_STATUS_FALSIFIED = 5,
  // A panic or other internal failure.
  INEXP_STATUS_INTERNAL = 6,
} InexpStatus;

// A diagram of initial exponents.
typedef struct InexpDiagram InexpDiagram;

// An ideal of `ℚ[x₁..x_m]` given by generators.
typedef struct InexpIdeal InexpIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *inexp_last_error(void);

// Library version as a static nul-terminated string.
const char *inexp_version(void);

// Parse generators over the given variable names.
//
// # Safety
// `variables` and `generators` point to arrays of `n_variables` and
// `n_generators` nul-terminated strings; `out` is writable.
enum InexpStatus inexp_ideal_new(const char *const *variables,
                                 size_t n_variables,
                                 const char *const *generators,
                                 size_t n_generators,
                                 struct InexpIdeal **out);

// # Safety
// `ideal` is null or a handle from [`inexp_ideal_new`] not yet freed.
void inexp_ideal_free(struct InexpIdeal *ideal);

// Number of variables of the ideal, 0 for a null handle.
//
// # Safety
// `ideal` is null or a live handle.
size_t inexp_ideal_dim(const struct InexpIdeal *ideal);

// The diagram of initial exponents of the localized ideal.
//
// # Safety
// `ideal` is a live handle, `out` is writable.
enum InexpStatus inexp_diagram_compute(const struct InexpIdeal *ideal, struct InexpDiagram **out);

// # Safety
// `diagram` is null or a handle from [`inexp_diagram_compute`] not yet
// freed.
void inexp_diagram_free(struct InexpDiagram *diagram);

// Ambient dimension, 0 for a null handle.
//
// # Safety
// `diagram` is null or a live handle.
size_t inexp_diagram_dim(const struct InexpDiagram *diagram);

// # Safety
// `diagram` is a live handle, `out` is writable.
enum InexpStatus inexp_diagram_vertex_count(const struct InexpDiagram *diagram, size_t *out);

// Copy vertex `index` (in increasing monomial order) into `buf`, which
// holds `len` entries; `len` must equal the dimension.
//
// # Safety
// `diagram` is a live handle, `buf` has room for `len` values.
enum InexpStatus inexp_diagram_vertex(const struct InexpDiagram *diagram,
                                      size_t index,
                                      uint32_t *buf,
                                      size_t len);

// Whether the exponent `exp[0..len]` lies in the diagram.
//
// # Safety
// `diagram` is a live handle, `exp` has `len` readable values, `out` is
// writable.
enum InexpStatus inexp_diagram_contains(const struct InexpDiagram *diagram,
                                        const uint32_t *exp,
                                        size_t len,
                                        bool *out);

// `H(η)`: complement points of length at most `eta`.
//
// # Safety
// `diagram` is a live handle, `out` is writable.
enum InexpStatus inexp_diagram_hs(const struct InexpDiagram *diagram, uint64_t eta, uint64_t *out);

// Vertices as a JSON array of arrays. Release with [`inexp_string_free`].
//
// # Safety
// `diagram` is a live handle, `out` is writable.
enum InexpStatus inexp_diagram_to_json(const struct InexpDiagram *diagram, char **out);

// # Safety
// `s` is null or a string returned by this library, not yet freed.
void inexp_string_free(char *s);

// Multiplicity of an ideal generated by a regular sequence of `k`
// elements, after checking that all three computations agree.
//
// # Safety
// `ideal` is a live handle, `out` is writable.
enum InexpStatus inexp_multiplicity(const struct InexpIdeal *ideal,
                                    size_t k,
                                    uint64_t seed,
                                    uint64_t *out);

// Jet order from which the diagram of the jet ideal equals that of the
// ideal, for a certified regular sequence of `k` generators.
//
// # Safety
// `ideal` is a live handle, `out` is writable.
enum InexpStatus inexp_determinacy_bound(const struct InexpIdeal *ideal,
                                         size_t k,
                                         uint64_t seed,
                                         uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INEXP_H */
