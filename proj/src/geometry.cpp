#include "paravector/geometry.hpp"

#include <cmath>

namespace pv {

namespace {

void require_non_singular(const Paravector& g, const Tolerance& tol) {
  if (std::abs(det(g)) <= det_threshold(g, tol)) {
    throw Error(ErrorCode::SingularParavector, "relation requires non-singular paravectors");
  }
}

double joint_scale(const Paravector& g1, const Paravector& g2) {
  return max_abs(g1) * max_abs(g2);
}

}  // namespace

bool is_parallel(const Paravector& g1, const Paravector& g2, const Tolerance& tol) {
  require_non_singular(g1, tol);
  require_non_singular(g2, tol);
  return tol.accepts(max_abs(vector_product(g1, g2, Orientation::Right)), joint_scale(g1, g2));
}

bool is_perpendicular(const Paravector& g1, const Paravector& g2, const Tolerance& tol) {
  require_non_singular(g1, tol);
  require_non_singular(g2, tol);
  return tol.accepts(std::abs(scalar_product(g1, g2)), joint_scale(g1, g2));
}

bool is_spatially_parallel(const Paravector& g1, const Paravector& g2, const Tolerance& tol) {
  const CVector3& b1 = g1.vector();
  const CVector3& b2 = g2.vector();
  return tol.accepts(max_abs(cross(b1, b2)), max_abs(b1) * max_abs(b2));
}

bool is_singularly_parallel(const Paravector& g1, const Paravector& g2, const Tolerance& tol) {
  if (!classify(g1, tol).is_singular || !classify(g2, tol).is_singular) return false;
  return tol.accepts(max_abs(integrated(g1, g2, Orientation::Right).value), joint_scale(g1, g2));
}

Angle::Angle(const Paravector& value, Orientation o, const Tolerance& tol)
    : value_(value), orientation_(o) {
  if (std::abs(det(value) - 1.0) > det_threshold(value, tol)) {
    throw Error(ErrorCode::NotOrthogonal, "angle value must have determinant 1");
  }
}

Angle angle(const Paravector& g1, const Paravector& g2, Orientation o, const Tolerance& tol) {
  if (!classify(g1, tol).is_proper || !classify(g2, tol).is_proper) {
    throw Error(ErrorCode::ImproperParavector, "angle requires proper paravectors");
  }
  const double scale = modulus(g1, tol) * modulus(g2, tol);
  return Angle(integrated(g1, g2, o).value / Complex(scale, 0.0), o, Angle::Unchecked{});
}

Angle compose_angles(const Angle& p, const Angle& q) {
  if (p.orientation() != q.orientation()) {
    throw Error(ErrorCode::OrientationMismatch, "cannot compose left and right angles");
  }
  return Angle(p.value() * q.value(), p.orientation(), Angle::Unchecked{});
}

Angle explement(const Angle& p) { return Angle(rev(p.value()), p.orientation(), Angle::Unchecked{}); }

}  // namespace pv
