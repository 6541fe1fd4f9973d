#include "paravector/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pv {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double max_abs(Complex z) { return std::max(std::abs(z.real()), std::abs(z.imag())); }

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Validation: return "validation error";
    case ErrorCode::SingularParavector: return "singular paravector";
    case ErrorCode::ImproperParavector: return "improper paravector";
    case ErrorCode::NotOrthogonal: return "not an orthogonal paravector";
    case ErrorCode::OrientationMismatch: return "orientation mismatch";
    case ErrorCode::BadUnitVector: return "bad unit vector";
    case ErrorCode::IsotropicNormal: return "isotropic normal";
    case ErrorCode::DegenerateComposition: return "degenerate composition";
    case ErrorCode::NotAParavectorMatrix: return "not a paravector matrix";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Arity: return "arity error";
  }
  return "unknown error";
}

Tolerance::Tolerance(double abs_tol, double rel_tol) : abs(abs_tol), rel(rel_tol) {
  if (!(std::isfinite(abs) && std::isfinite(rel)) || abs < 0.0 || rel < 0.0) {
    throw Error(ErrorCode::Validation, "tolerance must be finite and non-negative");
  }
}

// --- CVector3 ---------------------------------------------------------------

CVector3::CVector3(Complex x, Complex y, Complex z) : c_{x, y, z} {
  if (!(finite(x) && finite(y) && finite(z))) {
    throw Error(ErrorCode::Validation, "vector component is not finite");
  }
}

CVector3 CVector3::from_parts(const Vec3& real, const Vec3& imag) {
  return {Complex(real[0], imag[0]), Complex(real[1], imag[1]), Complex(real[2], imag[2])};
}

CVector3 operator+(const CVector3& u, const CVector3& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

CVector3 operator-(const CVector3& u, const CVector3& v) {
  return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}

CVector3 operator-(const CVector3& u) { return {-u[0], -u[1], -u[2]}; }

CVector3 operator*(Complex k, const CVector3& u) { return {k * u[0], k * u[1], k * u[2]}; }

CVector3 operator*(const CVector3& u, Complex k) { return k * u; }

CVector3 operator/(const CVector3& u, Complex k) { return {u[0] / k, u[1] / k, u[2] / k}; }

Complex dot(const CVector3& u, const CVector3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

CVector3 cross(const CVector3& u, const CVector3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

CVector3 conj(const CVector3& u) { return {std::conj(u[0]), std::conj(u[1]), std::conj(u[2])}; }

double max_abs(const CVector3& u) {
  return std::max({max_abs(u[0]), max_abs(u[1]), max_abs(u[2])});
}

// --- Paravector -------------------------------------------------------------

Paravector::Paravector(Complex scalar, const CVector3& vector) : s_(scalar), v_(vector) {
  if (!finite(scalar)) throw Error(ErrorCode::Validation, "scalar component is not finite");
}

Paravector Paravector::from_components(std::span<const double, 8> c) {
  return Paravector(Complex(c[0], c[1]),
                    CVector3::from_parts({c[2], c[3], c[4]}, {c[5], c[6], c[7]}));
}

std::array<double, 8> Paravector::components() const {
  return {s_.real(), s_.imag(), v_[0].real(), v_[1].real(),
          v_[2].real(), v_[0].imag(), v_[1].imag(), v_[2].imag()};
}

Paravector operator+(const Paravector& p, const Paravector& q) {
  return Paravector(p.scalar() + q.scalar(), p.vector() + q.vector());
}

Paravector operator-(const Paravector& p, const Paravector& q) {
  return Paravector(p.scalar() - q.scalar(), p.vector() - q.vector());
}

Paravector operator-(const Paravector& p) { return Paravector(-p.scalar(), -p.vector()); }

Paravector operator*(const Paravector& p, const Paravector& q) {
  const Complex a1 = p.scalar();
  const Complex a2 = q.scalar();
  const CVector3& b1 = p.vector();
  const CVector3& b2 = q.vector();
#ifdef PV_MUTANT_DROP_CROSS
  return Paravector(a1 * a2 + dot(b1, b2), a2 * b1 + a1 * b2);
#else
  return Paravector(a1 * a2 + dot(b1, b2), a2 * b1 + a1 * b2 + Complex(0.0, 1.0) * cross(b1, b2));
#endif
}

Paravector operator*(Complex k, const Paravector& p) {
  return Paravector(k * p.scalar(), k * p.vector());
}

Paravector operator*(const Paravector& p, Complex k) { return k * p; }

Paravector operator/(const Paravector& p, Complex k) {
  return Paravector(p.scalar() / k, p.vector() / k);
}

Paravector rev(const Paravector& p) {
#ifdef PV_MUTANT_REV_SIGN
  return p;
#else
  return Paravector(p.scalar(), -p.vector());
#endif
}

Paravector conj(const Paravector& p) { return Paravector(std::conj(p.scalar()), conj(p.vector())); }

Paravector vigor(const Paravector& p) { return p * conj(p); }

Complex det(const Paravector& p) { return p.scalar() * p.scalar() - dot(p.vector(), p.vector()); }

double max_abs(const Paravector& p) { return std::max(max_abs(p.scalar()), max_abs(p.vector())); }

double det_threshold(const Paravector& p, const Tolerance& tol) {
  const double scale = max_abs(p);
  return tol.abs + tol.rel * scale * scale;
}

Paravector inverse(const Paravector& p, const Tolerance& tol) {
  const Complex d = det(p);
  if (std::abs(d) <= det_threshold(p, tol)) {
    throw Error(ErrorCode::SingularParavector, "singular paravector has no inverse");
  }
  return rev(p) / d;
}

Classification classify(const Paravector& p, const Tolerance& tol) {
  Classification c;
  c.tol = tol;
  c.det = det(p);
  const double threshold = det_threshold(p, tol);
  c.is_singular = std::abs(c.det) <= threshold;
  c.is_proper = !c.is_singular && std::abs(c.det.imag()) <= threshold && c.det.real() > threshold;
  c.is_orthogonal = c.is_proper && std::abs(c.det - 1.0) <= threshold;
  // special: b = 0 and d = 0, i.e. G^- = G*
  const double scale = max_abs(p);
  c.is_special = tol.accepts(std::abs(p.scalar().imag()), scale) &&
                 tol.accepts(max_abs(CVector3::from_parts(p.vector().real(), {})), scale);
  c.is_unitar = max_abs(vigor(p) - Paravector::one()) <= threshold;
  return c;
}

double modulus(const Paravector& p, const Tolerance& tol) {
  const Classification c = classify(p, tol);
  if (c.is_singular) return 0.0;
  if (!c.is_proper) {
    throw Error(ErrorCode::ImproperParavector,
                "module exists only for proper or singular paravectors");
  }
  return std::sqrt(c.det.real());
}

Paravector normalize(const Paravector& p, const Tolerance& tol) {
  const Classification c = classify(p, tol);
  if (!c.is_proper) {
    throw Error(ErrorCode::ImproperParavector, "normalization requires a proper paravector");
  }
  return p / Complex(std::sqrt(c.det.real()), 0.0);
}

bool approx_eq(const Paravector& p, const Paravector& q, const Tolerance& tol) {
  const double scale = std::max(max_abs(p), max_abs(q));
  const auto x = p.components();
  const auto y = q.components();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!tol.accepts(std::abs(x[k] - y[k]), scale)) return false;
  }
  return true;
}

bool approx_eq(const CVector3& u, const CVector3& v, const Tolerance& tol) {
  return approx_eq(Paravector(Complex{}, u), Paravector(Complex{}, v), tol);
}

bool approx_eq(Complex x, Complex y, const Tolerance& tol) {
  return approx_eq(Paravector(x), Paravector(y), tol);
}

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double norm(const Vec3& u) { return std::sqrt(dot(u, u)); }

}  // namespace pv
