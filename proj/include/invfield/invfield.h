#ifndef INVFIELD_H
#define INVFIELD_H

/*
 * C interface to the invfield library: exact rational function fields,
 * invariant-generator towers for transitive groups of degree 6, generic
 * sextics and Frobenius sampling.
 *
 * Every function returns an ivf_status. Results come back through out
 * parameters; strings returned through `char**` are owned by the caller and
 * released with ivf_free_string. On failure ivf_last_error() describes the
 * problem (per thread, valid until the next call on that thread).
 *
 * Fields are named by text: "Q", "GF(p)", "Q(z3)" and "GF(p)(z3)".
 */

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__) || defined(__clang__)
#define IVF_API __attribute__((visibility("default")))
#else
#define IVF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ivf_status {
  IVF_OK = 0,
  IVF_E_DIVISION_BY_ZERO,
  IVF_E_AMBIENT_MISMATCH,
  IVF_E_UNKNOWN_VARIABLE,
  IVF_E_NOT_DIVISIBLE,
  IVF_E_SUBSTITUTION_POLE,
  IVF_E_POLE_AT_POINT,
  IVF_E_ARITY_MISMATCH,
  IVF_E_DEGREE_MISMATCH,
  IVF_E_CLOSURE_BUDGET,
  IVF_E_WRONG_CHARACTERISTIC,
  IVF_E_NEEDS_CYCLO_FIELD,
  IVF_E_CERTIFICATE_FAILURE,
  IVF_E_IDENTITY_FAILURE,
  IVF_E_POLE_AT_PARAMETERS,
  IVF_E_NOT_SQUAREFREE,
  IVF_E_NO_USABLE_PRIMES,
  IVF_E_EXPONENT_OVERFLOW,
  IVF_E_PARSE,
  IVF_E_INVALID_ARGUMENT,
  IVF_E_RETRIES_EXHAUSTED,
  IVF_E_NOT_PROVIDED,
  IVF_E_INTERNAL,
  IVF_E_NULL_ARGUMENT
} ivf_status;

typedef struct ivf_ratfunc ivf_ratfunc;
typedef struct ivf_tower ivf_tower;
typedef struct ivf_sextic ivf_sextic;

IVF_API const char* ivf_version(void);
IVF_API const char* ivf_status_name(ivf_status status);
IVF_API const char* ivf_last_error(void);
IVF_API void ivf_free_string(char* s);

/* Field elements. `op` is one of "add", "sub", "mul", "div", "neg", "inv",
 * "conj"; unary operations ignore `b`. */
IVF_API ivf_status ivf_field_characteristic(const char* field, unsigned* out);
IVF_API ivf_status ivf_element_op(const char* field, const char* op, const char* a, const char* b, char** out);

/* Rational functions. `vars` is a comma-separated variable list. */
IVF_API ivf_status ivf_ratfunc_parse(const char* field, const char* vars, const char* text, ivf_ratfunc** out);
IVF_API ivf_status ivf_ratfunc_from_json(const char* field, const char* document, ivf_ratfunc** out);
IVF_API void ivf_ratfunc_free(ivf_ratfunc* r);
IVF_API ivf_status ivf_ratfunc_to_string(const ivf_ratfunc* r, char** out);
IVF_API ivf_status ivf_ratfunc_to_json(const ivf_ratfunc* r, char** out);
/* op: '+', '-', '*', '/' */
IVF_API ivf_status ivf_ratfunc_arith(const ivf_ratfunc* a, char op, const ivf_ratfunc* b, ivf_ratfunc** out);
/* Substitutes x_i -> x_{sigma(i)}; `cycles` like "(123)(45)". */
IVF_API ivf_status ivf_ratfunc_apply_perm(const ivf_ratfunc* r, const char* cycles, ivf_ratfunc** out);
IVF_API ivf_status ivf_ratfunc_equal(const ivf_ratfunc* a, const ivf_ratfunc* b, int* out);
IVF_API ivf_status ivf_ratfunc_eval(const ivf_ratfunc* r, const char* const* point, size_t n, char** out);

/* Permutation groups from the degree-6 catalog: G1..G4, A6, S6, C3xC3. */
IVF_API ivf_status ivf_catalog_json(char** out);
IVF_API ivf_status ivf_group_order(const char* group, uint64_t* out);
IVF_API ivf_status ivf_group_census_json(const char* group, char** out);
IVF_API ivf_status ivf_group_contains(const char* group, const char* cycles, int* out);
IVF_API ivf_status ivf_perm_order(unsigned degree, const char* cycles, unsigned* out);
/* (a*b)(x) = a(b(x)) */
IVF_API ivf_status ivf_perm_compose(unsigned degree, const char* a, const char* b, char** out);

/* Towers. `path` is "direct" (also for NULL), "descent" (G3 over a field
 * with a cube root of unity, characteristic not 3) or "artin-schreier" (G3
 * in characteristic 3). */
IVF_API ivf_status ivf_tower_build(const char* group, unsigned characteristic, const char* path, ivf_tower** out);
IVF_API void ivf_tower_free(ivf_tower* t);
IVF_API ivf_status ivf_tower_describe_json(const ivf_tower* t, char** out);
/* Final generators as functions of the previous level. */
IVF_API ivf_status ivf_tower_generators_json(const ivf_tower* t, char** out);
/* Final generators expanded as functions of x1..x6 (can be large). */
IVF_API ivf_status ivf_tower_x_forms_json(const ivf_tower* t, char** out);
/* Replaces generator `name` by name+1, or name+plus when plus is not NULL. */
IVF_API ivf_status ivf_tower_mutate(const ivf_tower* t, const char* name, const char* plus, ivf_tower** out);
/* Runs every certificate obligation; *pass is 1 when all hold. */
IVF_API ivf_status ivf_tower_verify(const ivf_tower* t, uint64_t seed, int* pass, char** report_json);
/* Invariance of the final x-forms under the generators of `group`. */
IVF_API ivf_status ivf_tower_invariance(const ivf_tower* t, const char* group, int* pass, char** report_json);

/* Masuda's pair over the given characteristic: invariance and rank check. */
IVF_API ivf_status ivf_masuda_report(unsigned characteristic, uint64_t seed, int* pass, char** report_json);
IVF_API ivf_status ivf_wreath_report(unsigned n, unsigned characteristic, uint64_t seed, int* pass, char** report_json);
IVF_API ivf_status ivf_artin_schreier_report(unsigned p, uint64_t seed, int* pass, char** report_json);

/* Generic sextics. `form` is "full", "char2" or "general"; groups other
 * than G1 give IVF_E_NOT_PROVIDED. */
IVF_API ivf_status ivf_sextic_new(const char* group, const char* form, unsigned characteristic, ivf_sextic** out);
IVF_API void ivf_sextic_free(ivf_sextic* s);
IVF_API ivf_status ivf_sextic_to_string(const ivf_sextic* s, char** out);
IVF_API ivf_status ivf_sextic_to_json(const ivf_sextic* s, char** out);
IVF_API ivf_status ivf_sextic_param_count(const ivf_sextic* s, size_t* out);
/* Symbolic identity a_i(z(x)) = (-1)^i e_i(x); full form only. */
IVF_API ivf_status ivf_sextic_verify_identity(const ivf_sextic* s, int* pass, char** report_json);
IVF_API ivf_status ivf_sextic_specialize(const ivf_sextic* s, const char* const* values, size_t n, char** out_json);

/* Frobenius cycle-type census of a monic-izable polynomial over Q, given
 * by coefficients c_n..c_0, over primes in [pmin, pmax]. When `group` is
 * not NULL the result includes TV distance and containment against it. */
IVF_API ivf_status ivf_frobenius_census(const char* const* coeffs, size_t n, uint32_t pmin, uint32_t pmax,
                                const char* group, char** out_json);
/* Same, reading a polynomial JSON document (one variable) or a specialized
 * sextic document {"coeffs": [a1..a6]}. */
IVF_API ivf_status ivf_frobenius_census_json(const char* document, uint32_t pmin, uint32_t pmax, const char* group,
                                     char** out_json);
/* The char-2 form over GF(2)(s), t_i in GF(2)[s] encoded as bit masks. */
IVF_API ivf_status ivf_char2_census(const uint64_t params[5], unsigned max_degree, const char* group, char** out_json);
/* Factor degree pattern of a monic polynomial over GF(p), residues low
 * degree first; `pattern` receives up to `cap` parts in descending order. */
IVF_API ivf_status ivf_degree_pattern(uint32_t p, const uint32_t* coeffs, size_t n, unsigned* pattern, size_t cap,
                              size_t* len);

#ifdef __cplusplus
}
#endif

#endif
