#include "paravector/transforms.hpp"

#include <cmath>

namespace pv {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex checked_square(const CVector3& w, const Tolerance& tol) {
  const Complex ww = dot(w, w);
  const double scale = max_abs(w);
  if (std::abs(ww) <= tol.abs + tol.rel * scale * scale) {
    throw Error(ErrorCode::IsotropicNormal, "normal vector is isotropic (w.w = 0)");
  }
  return ww;
}

}  // namespace

RotationAxis RotationAxis::from_proper(const Paravector& phi, const Tolerance& tol) {
  return RotationAxis(normalize(phi, tol));
}

RotationAxis RotationAxis::from_orthogonal(const Paravector& lambda, const Tolerance& tol) {
  if (!is_orthogonal_transform(lambda, tol)) {
    throw Error(ErrorCode::NotOrthogonal, "rotation axis must have determinant 1");
  }
  return RotationAxis(lambda);
}

void validate(const SpatialRotation& r, const Tolerance& tol) {
  if (!std::isfinite(r.phi)) throw Error(ErrorCode::Validation, "rotation angle is not finite");
  const double len = norm(r.n);
  if (!std::isfinite(len) || !tol.accepts(std::abs(len - 1.0), 1.0)) {
    throw Error(ErrorCode::BadUnitVector, "rotation axis must be a unit vector");
  }
}

Paravector similarity(const Paravector& g, const Paravector& f, const Tolerance& tol) {
  return inverse(f, tol) * g * f;
}

Paravector rotate(const Paravector& g, const RotationAxis& axis, Orientation o) {
  const Paravector& l = axis.value();
  if (o == Orientation::Left) return rev(l) * g * l;
  return l * g * rev(l);
}

RotationAxis spatial_axis(const SpatialRotation& r, const Tolerance& tol) {
  validate(r, tol);
  const double s = std::sin(r.phi);
  return RotationAxis::from_orthogonal(
      Paravector(Complex(std::cos(r.phi), 0.0),
                 CVector3::from_parts({}, {r.n[0] * s, r.n[1] * s, r.n[2] * s})),
      tol);
}

Vec3 rotate_vector(const Vec3& w, const SpatialRotation& r, const Tolerance& tol) {
  const Paravector g(Complex{}, CVector3::from_parts(w, {}));
  return rotate(g, spatial_axis(r, tol), Orientation::Left).vector().real();
}

EulerComposition euler_compose(const SpatialRotation& r1, const SpatialRotation& r2,
                               const Tolerance& tol) {
  const Paravector p = spatial_axis(r1, tol).value() * spatial_axis(r2, tol).value();
  // p = [cos phi ; i n sin phi]
  const double c = p.scalar().real();
  const Vec3 u = p.vector().imag();
  const double s = norm(u);
  EulerComposition out;
  out.rotation.phi = std::atan2(s, c);
  if (tol.accepts(s, 1.0)) {
    out.axis_defined = false;
    out.rotation.n = {0.0, 0.0, 1.0};
    out.rotation.phi = c >= 0.0 ? 0.0 : std::acos(-1.0);
  } else {
    out.rotation.n = {u[0] / s, u[1] / s, u[2] / s};
  }
  return out;
}

Paravector mirror(const Paravector& g, const CVector3& w, const Tolerance& tol) {
  const Complex ww = checked_square(w, tol);
  const Paravector normal(Complex{}, w);
  return (normal * g * normal) / (-ww);
}

RotationAxis compose_mirrors(const CVector3& w1, const CVector3& w2, const Tolerance& tol) {
  checked_square(w1, tol);
  checked_square(w2, tol);
  const Paravector m(dot(w1, w2), kI * cross(w1, w2));
  const Complex d = det(m);
  if (std::abs(d) <= det_threshold(m, tol)) {
    throw Error(ErrorCode::DegenerateComposition, "mirror composition has no rotation axis");
  }
  return RotationAxis(m / std::sqrt(d));
}

Paravector axial_symmetry(const Paravector& g, const CVector3& w, const Tolerance& tol) {
  const Complex ww = checked_square(w, tol);
  const Paravector left(Complex{}, -kI * w);
  const Paravector right(Complex{}, kI * w);
  return (left * g * right) / ww;
}

bool is_orthogonal_transform(const Paravector& l, const Tolerance& tol) {
  return std::abs(det(l) - 1.0) <= det_threshold(l, tol);
}

}  // namespace pv
