#ifndef PARAVECTOR_H
#define PARAVECTOR_H

/*
 * C interface to the paravector library.
 *
 * Every function returns a pv_status; results go through out-parameters.
 * On failure pv_last_error_message() describes the error for the calling
 * thread. Strings returned through char** are heap-allocated and must be
 * released with pv_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARAVECTOR_BUILD)
#    define PV_API __declspec(dllexport)
#  else
#    define PV_API __declspec(dllimport)
#  endif
#else
#  define PV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pv_status {
  PV_OK = 0,
  PV_ERR_VALIDATION,
  PV_ERR_SINGULAR,
  PV_ERR_IMPROPER,
  PV_ERR_NOT_ORTHOGONAL,
  PV_ERR_ORIENTATION_MISMATCH,
  PV_ERR_BAD_UNIT_VECTOR,
  PV_ERR_ISOTROPIC_NORMAL,
  PV_ERR_DEGENERATE_COMPOSITION,
  PV_ERR_NOT_A_PARAVECTOR_MATRIX,
  PV_ERR_PARSE,
  PV_ERR_ARITY,
  PV_ERR_NULL_ARGUMENT,
  PV_ERR_INTERNAL
} pv_status;

typedef enum pv_orientation { PV_RIGHT = 0, PV_LEFT = 1 } pv_orientation;

typedef struct pv_complex {
  double re;
  double im;
} pv_complex;

/* [a + i d ; b + i c] */
typedef struct pv_paravector {
  double a;
  double d;
  double b[3];
  double c[3];
} pv_paravector;

/* b + i c */
typedef struct pv_vector3 {
  double b[3];
  double c[3];
} pv_vector3;

typedef struct pv_tolerance {
  double abs;
  double rel;
} pv_tolerance;

typedef struct pv_classification {
  pv_complex det;
  int proper;
  int singular;
  int orthogonal;
  int special;
  int unitar;
} pv_classification;

typedef struct pv_spatial_rotation {
  double n[3];
  double phi;
} pv_spatial_rotation;

/* Row-major. */
typedef struct pv_matrix4 {
  pv_complex m[4][4];
} pv_matrix4;

typedef struct pv_matrix2 {
  pv_complex m[2][2];
} pv_matrix2;

typedef struct pv_fuzz_report pv_fuzz_report;

PV_API const char* pv_status_string(pv_status status);
PV_API const char* pv_last_error_message(void);
PV_API pv_tolerance pv_default_tolerance(void);
PV_API void pv_string_free(char* s);

/* Passing NULL for a tolerance selects the default (1e-9, 1e-9). */

PV_API pv_status pv_add(const pv_paravector* p, const pv_paravector* q, pv_paravector* out);
PV_API pv_status pv_mul(const pv_paravector* p, const pv_paravector* q, pv_paravector* out);
PV_API pv_status pv_scale(pv_complex k, const pv_paravector* p, pv_paravector* out);
PV_API pv_status pv_rev(const pv_paravector* p, pv_paravector* out);
PV_API pv_status pv_conj(const pv_paravector* p, pv_paravector* out);
PV_API pv_status pv_vigor(const pv_paravector* p, pv_paravector* out);
PV_API pv_status pv_det(const pv_paravector* p, pv_complex* out);
PV_API pv_status pv_inverse(const pv_paravector* p, const pv_tolerance* tol, pv_paravector* out);
PV_API pv_status pv_module(const pv_paravector* p, const pv_tolerance* tol, double* out);
PV_API pv_status pv_normalize(const pv_paravector* p, const pv_tolerance* tol, pv_paravector* out);
PV_API pv_status pv_classify(const pv_paravector* p, const pv_tolerance* tol,
                             pv_classification* out);

PV_API pv_status pv_integrated(const pv_paravector* p, const pv_paravector* q, pv_orientation o,
                               pv_paravector* out);
PV_API pv_status pv_scalar_product(const pv_paravector* p, const pv_paravector* q,
                                   pv_complex* out);
PV_API pv_status pv_vector_product(const pv_paravector* p, const pv_paravector* q,
                                   pv_orientation o, pv_vector3* out);

PV_API pv_status pv_is_parallel(const pv_paravector* p, const pv_paravector* q,
                                const pv_tolerance* tol, int* out);
PV_API pv_status pv_is_perpendicular(const pv_paravector* p, const pv_paravector* q,
                                     const pv_tolerance* tol, int* out);
PV_API pv_status pv_angle(const pv_paravector* p, const pv_paravector* q, pv_orientation o,
                          const pv_tolerance* tol, pv_paravector* out);
/* Both inputs must be angles (det = 1) of the same orientation. */
PV_API pv_status pv_compose_angles(const pv_paravector* p, pv_orientation op,
                                   const pv_paravector* q, pv_orientation oq,
                                   const pv_tolerance* tol, pv_paravector* out);

/* The axis is normalized first; it must be proper. */
PV_API pv_status pv_rotate(const pv_paravector* g, const pv_paravector* axis, pv_orientation o,
                           const pv_tolerance* tol, pv_paravector* out);
PV_API pv_status pv_similarity(const pv_paravector* g, const pv_paravector* f,
                               const pv_tolerance* tol, pv_paravector* out);
PV_API pv_status pv_spatial_axis(const pv_spatial_rotation* r, const pv_tolerance* tol,
                                 pv_paravector* out);
PV_API pv_status pv_rotate_vector(const double w[3], const pv_spatial_rotation* r,
                                  const pv_tolerance* tol, double out[3]);
PV_API pv_status pv_euler_compose(const pv_spatial_rotation* r1, const pv_spatial_rotation* r2,
                                  const pv_tolerance* tol, pv_spatial_rotation* out,
                                  int* axis_defined);
PV_API pv_status pv_mirror(const pv_paravector* g, const pv_vector3* w, const pv_tolerance* tol,
                           pv_paravector* out);
PV_API pv_status pv_axial_symmetry(const pv_paravector* g, const pv_vector3* w,
                                   const pv_tolerance* tol, pv_paravector* out);
PV_API pv_status pv_compose_mirrors(const pv_vector3* w1, const pv_vector3* w2,
                                    const pv_tolerance* tol, pv_paravector* out);

PV_API pv_status pv_to_matrix4(const pv_paravector* g, pv_matrix4* out);
PV_API pv_status pv_from_matrix4(const pv_matrix4* m, const pv_tolerance* tol, pv_paravector* out);
PV_API pv_status pv_to_pauli(const pv_paravector* g, pv_matrix2* out);
PV_API pv_status pv_format_matrix4(const pv_matrix4* m, char** out);
PV_API pv_status pv_format_matrix2(const pv_matrix2* m, char** out);

PV_API pv_status pv_parse(const char* text, pv_paravector* out);
PV_API pv_status pv_parse_vector3(const char* text, pv_vector3* out);
/* A JSON array of exactly `arity` finite numbers. */
PV_API pv_status pv_parse_reals(const char* text, size_t arity, double* out);
PV_API pv_status pv_format(const pv_paravector* g, char** out);
PV_API pv_status pv_format_complex(pv_complex z, char** out);
PV_API pv_status pv_format_vector3(const pv_vector3* v, char** out);
PV_API pv_status pv_format_double(double x, char** out);
PV_API pv_status pv_format_classification(const pv_classification* c, const pv_tolerance* tol,
                                          int json, char** out);

PV_API pv_status pv_fuzz_run(uint64_t seed, uint64_t trials, const pv_tolerance* tol,
                             pv_fuzz_report** out);
PV_API void pv_fuzz_report_free(pv_fuzz_report* report);
PV_API size_t pv_fuzz_report_property_count(const pv_fuzz_report* report);
PV_API size_t pv_fuzz_report_failing_properties(const pv_fuzz_report* report);
/* name is owned by the report. */
PV_API pv_status pv_fuzz_report_property(const pv_fuzz_report* report, size_t index,
                                         const char** name, int* criterion, uint64_t* passes,
                                         uint64_t* failures, uint64_t* skips);
PV_API pv_status pv_fuzz_report_format(const pv_fuzz_report* report, int json, char** out);

#ifdef __cplusplus
}
#endif

#endif
