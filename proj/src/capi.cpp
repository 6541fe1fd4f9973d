#include "paravector/paravector.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "paravector/fuzz.hpp"
#include "paravector/geometry.hpp"
#include "paravector/matrix_rep.hpp"
#include "paravector/products.hpp"
#include "paravector/transforms.hpp"
#include "paravector/wire.hpp"

struct pv_fuzz_report {
  pv::fuzz::FuzzReport report;
};

namespace {

thread_local std::string last_error;

pv_status status_of(pv::ErrorCode code) {
  using pv::ErrorCode;
  switch (code) {
    case ErrorCode::Validation: return PV_ERR_VALIDATION;
    case ErrorCode::SingularParavector: return PV_ERR_SINGULAR;
    case ErrorCode::ImproperParavector: return PV_ERR_IMPROPER;
    case ErrorCode::NotOrthogonal: return PV_ERR_NOT_ORTHOGONAL;
    case ErrorCode::OrientationMismatch: return PV_ERR_ORIENTATION_MISMATCH;
    case ErrorCode::BadUnitVector: return PV_ERR_BAD_UNIT_VECTOR;
    case ErrorCode::IsotropicNormal: return PV_ERR_ISOTROPIC_NORMAL;
    case ErrorCode::DegenerateComposition: return PV_ERR_DEGENERATE_COMPOSITION;
    case ErrorCode::NotAParavectorMatrix: return PV_ERR_NOT_A_PARAVECTOR_MATRIX;
    case ErrorCode::Parse: return PV_ERR_PARSE;
    case ErrorCode::Arity: return PV_ERR_ARITY;
  }
  return PV_ERR_INTERNAL;
}

struct NullArgument {};

template <typename T>
const T& need(const T* p) {
  if (p == nullptr) throw NullArgument{};
  return *p;
}

template <typename T>
T& need(T* p) {
  if (p == nullptr) throw NullArgument{};
  return *p;
}

template <typename F>
pv_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return PV_OK;
  } catch (const pv::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const NullArgument&) {
    last_error = "null argument";
    return PV_ERR_NULL_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PV_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PV_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return PV_ERR_INTERNAL;
  }
}

pv::Complex in(pv_complex z) { return {z.re, z.im}; }
pv_complex out(pv::Complex z) { return {z.real(), z.imag()}; }

pv::CVector3 in(const pv_vector3& v) {
  return pv::CVector3::from_parts({v.b[0], v.b[1], v.b[2]}, {v.c[0], v.c[1], v.c[2]});
}

pv_vector3 out(const pv::CVector3& v) {
  pv_vector3 r{};
  for (int k = 0; k < 3; ++k) {
    r.b[k] = v[k].real();
    r.c[k] = v[k].imag();
  }
  return r;
}

pv::Paravector in(const pv_paravector& p) {
  return pv::Paravector(pv::Complex(p.a, p.d),
                        pv::CVector3::from_parts({p.b[0], p.b[1], p.b[2]}, {p.c[0], p.c[1], p.c[2]}));
}

pv_paravector out(const pv::Paravector& g) {
  const auto c = g.components();
  return {c[0], c[1], {c[2], c[3], c[4]}, {c[5], c[6], c[7]}};
}

pv::Tolerance in(const pv_tolerance* tol) {
  if (tol == nullptr) return {};
  return pv::Tolerance(tol->abs, tol->rel);
}

pv::Orientation in(pv_orientation o) {
  if (o == PV_RIGHT) return pv::Orientation::Right;
  if (o == PV_LEFT) return pv::Orientation::Left;
  throw pv::Error(pv::ErrorCode::Validation, "unknown orientation");
}

pv::SpatialRotation in(const pv_spatial_rotation& r) {
  pv::SpatialRotation s;
  s.n = {r.n[0], r.n[1], r.n[2]};
  s.phi = r.phi;
  return s;
}

template <std::size_t N, typename M>
pv::SquareMatrix<N> in_matrix(const M& m) {
  pv::SquareMatrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = in(m.m[i][j]);
  return r;
}

template <std::size_t N, typename M>
void out_matrix(const pv::SquareMatrix<N>& a, M& m) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m.m[i][j] = out(a(i, j));
}

char* duplicate(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* pv_status_string(pv_status status) {
  switch (status) {
    case PV_OK: return "ok";
    case PV_ERR_VALIDATION: return pv::to_string(pv::ErrorCode::Validation);
    case PV_ERR_SINGULAR: return pv::to_string(pv::ErrorCode::SingularParavector);
    case PV_ERR_IMPROPER: return pv::to_string(pv::ErrorCode::ImproperParavector);
    case PV_ERR_NOT_ORTHOGONAL: return pv::to_string(pv::ErrorCode::NotOrthogonal);
    case PV_ERR_ORIENTATION_MISMATCH: return pv::to_string(pv::ErrorCode::OrientationMismatch);
    case PV_ERR_BAD_UNIT_VECTOR: return pv::to_string(pv::ErrorCode::BadUnitVector);
    case PV_ERR_ISOTROPIC_NORMAL: return pv::to_string(pv::ErrorCode::IsotropicNormal);
    case PV_ERR_DEGENERATE_COMPOSITION: return pv::to_string(pv::ErrorCode::DegenerateComposition);
    case PV_ERR_NOT_A_PARAVECTOR_MATRIX: return pv::to_string(pv::ErrorCode::NotAParavectorMatrix);
    case PV_ERR_PARSE: return pv::to_string(pv::ErrorCode::Parse);
    case PV_ERR_ARITY: return pv::to_string(pv::ErrorCode::Arity);
    case PV_ERR_NULL_ARGUMENT: return "null argument";
    case PV_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pv_last_error_message(void) { return last_error.c_str(); }

pv_tolerance pv_default_tolerance(void) {
  const pv::Tolerance t;
  return {t.abs, t.rel};
}

void pv_string_free(char* s) { std::free(s); }

pv_status pv_add(const pv_paravector* p, const pv_paravector* q, pv_paravector* r) {
  return guarded([&] { need(r) = out(in(need(p)) + in(need(q))); });
}

pv_status pv_mul(const pv_paravector* p, const pv_paravector* q, pv_paravector* r) {
  return guarded([&] { need(r) = out(in(need(p)) * in(need(q))); });
}

pv_status pv_scale(pv_complex k, const pv_paravector* p, pv_paravector* r) {
  return guarded([&] { need(r) = out(in(k) * in(need(p))); });
}

pv_status pv_rev(const pv_paravector* p, pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::rev(in(need(p)))); });
}

pv_status pv_conj(const pv_paravector* p, pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::conj(in(need(p)))); });
}

pv_status pv_vigor(const pv_paravector* p, pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::vigor(in(need(p)))); });
}

pv_status pv_det(const pv_paravector* p, pv_complex* r) {
  return guarded([&] { need(r) = out(pv::det(in(need(p)))); });
}

pv_status pv_inverse(const pv_paravector* p, const pv_tolerance* tol, pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::inverse(in(need(p)), in(tol))); });
}

pv_status pv_module(const pv_paravector* p, const pv_tolerance* tol, double* r) {
  return guarded([&] { need(r) = pv::modulus(in(need(p)), in(tol)); });
}

pv_status pv_normalize(const pv_paravector* p, const pv_tolerance* tol, pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::normalize(in(need(p)), in(tol))); });
}

pv_status pv_classify(const pv_paravector* p, const pv_tolerance* tol, pv_classification* r) {
  return guarded([&] {
    const pv::Classification c = pv::classify(in(need(p)), in(tol));
    need(r) = {out(c.det), c.is_proper, c.is_singular, c.is_orthogonal, c.is_special, c.is_unitar};
  });
}

pv_status pv_integrated(const pv_paravector* p, const pv_paravector* q, pv_orientation o,
                        pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::integrated(in(need(p)), in(need(q)), in(o)).value); });
}

pv_status pv_scalar_product(const pv_paravector* p, const pv_paravector* q, pv_complex* r) {
  return guarded([&] { need(r) = out(pv::scalar_product(in(need(p)), in(need(q)))); });
}

pv_status pv_vector_product(const pv_paravector* p, const pv_paravector* q, pv_orientation o,
                            pv_vector3* r) {
  return guarded([&] { need(r) = out(pv::vector_product(in(need(p)), in(need(q)), in(o))); });
}

pv_status pv_is_parallel(const pv_paravector* p, const pv_paravector* q, const pv_tolerance* tol,
                         int* r) {
  return guarded([&] { need(r) = pv::is_parallel(in(need(p)), in(need(q)), in(tol)) ? 1 : 0; });
}

pv_status pv_is_perpendicular(const pv_paravector* p, const pv_paravector* q,
                              const pv_tolerance* tol, int* r) {
  return guarded(
      [&] { need(r) = pv::is_perpendicular(in(need(p)), in(need(q)), in(tol)) ? 1 : 0; });
}

pv_status pv_angle(const pv_paravector* p, const pv_paravector* q, pv_orientation o,
                   const pv_tolerance* tol, pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::angle(in(need(p)), in(need(q)), in(o), in(tol)).value()); });
}

pv_status pv_compose_angles(const pv_paravector* p, pv_orientation op, const pv_paravector* q,
                            pv_orientation oq, const pv_tolerance* tol, pv_paravector* r) {
  return guarded([&] {
    const pv::Tolerance t = in(tol);
    const pv::Angle a(in(need(p)), in(op), t);
    const pv::Angle b(in(need(q)), in(oq), t);
    need(r) = out(pv::compose_angles(a, b).value());
  });
}

pv_status pv_rotate(const pv_paravector* g, const pv_paravector* axis, pv_orientation o,
                    const pv_tolerance* tol, pv_paravector* r) {
  return guarded([&] {
    const pv::RotationAxis l = pv::RotationAxis::from_proper(in(need(axis)), in(tol));
    need(r) = out(pv::rotate(in(need(g)), l, in(o)));
  });
}

pv_status pv_similarity(const pv_paravector* g, const pv_paravector* f, const pv_tolerance* tol,
                        pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::similarity(in(need(g)), in(need(f)), in(tol))); });
}

pv_status pv_spatial_axis(const pv_spatial_rotation* rot, const pv_tolerance* tol,
                          pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::spatial_axis(in(need(rot)), in(tol)).value()); });
}

pv_status pv_rotate_vector(const double w[3], const pv_spatial_rotation* rot,
                           const pv_tolerance* tol, double r[3]) {
  return guarded([&] {
    if (w == nullptr || r == nullptr) throw NullArgument{};
    const pv::Vec3 v = pv::rotate_vector({w[0], w[1], w[2]}, in(need(rot)), in(tol));
    for (int k = 0; k < 3; ++k) r[k] = v[k];
  });
}

pv_status pv_euler_compose(const pv_spatial_rotation* r1, const pv_spatial_rotation* r2,
                           const pv_tolerance* tol, pv_spatial_rotation* r, int* axis_defined) {
  return guarded([&] {
    const pv::EulerComposition e = pv::euler_compose(in(need(r1)), in(need(r2)), in(tol));
    pv_spatial_rotation& dst = need(r);
    for (int k = 0; k < 3; ++k) dst.n[k] = e.rotation.n[k];
    dst.phi = e.rotation.phi;
    if (axis_defined != nullptr) *axis_defined = e.axis_defined ? 1 : 0;
  });
}

pv_status pv_mirror(const pv_paravector* g, const pv_vector3* w, const pv_tolerance* tol,
                    pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::mirror(in(need(g)), in(need(w)), in(tol))); });
}

pv_status pv_axial_symmetry(const pv_paravector* g, const pv_vector3* w, const pv_tolerance* tol,
                            pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::axial_symmetry(in(need(g)), in(need(w)), in(tol))); });
}

pv_status pv_compose_mirrors(const pv_vector3* w1, const pv_vector3* w2, const pv_tolerance* tol,
                             pv_paravector* r) {
  return guarded(
      [&] { need(r) = out(pv::compose_mirrors(in(need(w1)), in(need(w2)), in(tol)).value()); });
}

pv_status pv_to_matrix4(const pv_paravector* g, pv_matrix4* r) {
  return guarded([&] { out_matrix(pv::to_matrix4(in(need(g))), need(r)); });
}

pv_status pv_from_matrix4(const pv_matrix4* m, const pv_tolerance* tol, pv_paravector* r) {
  return guarded([&] { need(r) = out(pv::from_matrix4(in_matrix<4>(need(m)), in(tol))); });
}

pv_status pv_to_pauli(const pv_paravector* g, pv_matrix2* r) {
  return guarded([&] { out_matrix(pv::to_pauli(in(need(g))), need(r)); });
}

pv_status pv_format_matrix4(const pv_matrix4* m, char** r) {
  return guarded([&] { need(r) = duplicate(pv::format_matrix(in_matrix<4>(need(m)))); });
}

pv_status pv_format_matrix2(const pv_matrix2* m, char** r) {
  return guarded([&] { need(r) = duplicate(pv::format_matrix(in_matrix<2>(need(m)))); });
}

pv_status pv_parse(const char* text, pv_paravector* r) {
  return guarded([&] {
    if (text == nullptr) throw NullArgument{};
    need(r) = out(pv::parse_paravector(text));
  });
}

pv_status pv_parse_vector3(const char* text, pv_vector3* r) {
  return guarded([&] {
    if (text == nullptr) throw NullArgument{};
    need(r) = out(pv::parse_vector3(text));
  });
}

pv_status pv_parse_reals(const char* text, size_t arity, double* r) {
  return guarded([&] {
    if (text == nullptr || r == nullptr) throw NullArgument{};
    const std::vector<double> v = pv::parse_real_array(text, arity);
    std::copy(v.begin(), v.end(), r);
  });
}

pv_status pv_format(const pv_paravector* g, char** r) {
  return guarded([&] { need(r) = duplicate(pv::format_paravector(in(need(g)))); });
}

pv_status pv_format_complex(pv_complex z, char** r) {
  return guarded([&] { need(r) = duplicate(pv::format_complex(in(z))); });
}

pv_status pv_format_vector3(const pv_vector3* v, char** r) {
  return guarded([&] { need(r) = duplicate(pv::format_vector3(in(need(v)))); });
}

pv_status pv_format_double(double x, char** r) {
  return guarded([&] { need(r) = duplicate(pv::format_double(x)); });
}

pv_status pv_format_classification(const pv_classification* c, const pv_tolerance* tol, int json,
                                   char** r) {
  return guarded([&] {
    const pv_classification& src = need(c);
    pv::Classification k;
    k.det = in(src.det);
    k.is_proper = src.proper != 0;
    k.is_singular = src.singular != 0;
    k.is_orthogonal = src.orthogonal != 0;
    k.is_special = src.special != 0;
    k.is_unitar = src.unitar != 0;
    k.tol = in(tol);
    need(r) = duplicate(pv::format_classification(k, json != 0));
  });
}

pv_status pv_fuzz_run(uint64_t seed, uint64_t trials, const pv_tolerance* tol,
                      pv_fuzz_report** r) {
  return guarded([&] {
    pv_fuzz_report*& dst = need(r);
    pv::fuzz::FuzzConfig config;
    config.seed = seed;
    config.trials = trials;
    config.tol = in(tol);
    auto report = std::make_unique<pv_fuzz_report>();
    report->report = pv::fuzz::run(config);
    dst = report.release();
  });
}

void pv_fuzz_report_free(pv_fuzz_report* report) { delete report; }

size_t pv_fuzz_report_property_count(const pv_fuzz_report* report) {
  return report == nullptr ? 0 : report->report.properties.size();
}

size_t pv_fuzz_report_failing_properties(const pv_fuzz_report* report) {
  return report == nullptr ? 0 : report->report.failing_properties();
}

pv_status pv_fuzz_report_property(const pv_fuzz_report* report, size_t index, const char** name,
                                  int* criterion, uint64_t* passes, uint64_t* failures,
                                  uint64_t* skips) {
  return guarded([&] {
    const auto& props = need(report).report.properties;
    if (index >= props.size()) throw pv::Error(pv::ErrorCode::Validation, "property index out of range");
    const pv::fuzz::PropertyResult& p = props[index];
    if (name != nullptr) *name = p.name.c_str();
    if (criterion != nullptr) *criterion = p.criterion;
    if (passes != nullptr) *passes = p.passes;
    if (failures != nullptr) *failures = p.failures;
    if (skips != nullptr) *skips = p.skips;
  });
}

pv_status pv_fuzz_report_format(const pv_fuzz_report* report, int json, char** r) {
  return guarded(
      [&] { need(r) = duplicate(pv::fuzz::format_report(need(report).report, json != 0)); });
}

}  // extern "C"
