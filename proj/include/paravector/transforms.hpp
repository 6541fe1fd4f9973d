#pragma once

#include "paravector/core.hpp"
#include "paravector/products.hpp"

namespace pv {

/// An orthogonal paravector (det = 1) used as the axis of a rotation.
class RotationAxis {
 public:
  /// The identity rotation.
  RotationAxis() : value_(Paravector::one()) {}

  /// Normalizes any proper paravector; parallel inputs give the same rotation.
  static RotationAxis from_proper(const Paravector& phi, const Tolerance& tol = {});
  /// Accepts an already orthogonal paravector; throws NotOrthogonal otherwise.
  static RotationAxis from_orthogonal(const Paravector& lambda, const Tolerance& tol = {});

  const Paravector& value() const { return value_; }

 private:
  explicit RotationAxis(const Paravector& v) : value_(v) {}
  friend RotationAxis compose_mirrors(const CVector3&, const CVector3&, const Tolerance&);

  Paravector value_;
};

/// Euclidean rotation by 2*phi about the unit axis n.
struct SpatialRotation {
  Vec3 n{0.0, 0.0, 1.0};
  double phi = 0.0;
};

/// Throws BadUnitVector unless |n| = 1 within tolerance.
void validate(const SpatialRotation& r, const Tolerance& tol = {});

/// F^-1 G F. F must be non-singular.
Paravector similarity(const Paravector& g, const Paravector& f, const Tolerance& tol = {});

/// Left: L^- G L.  Right: L G L^-.
Paravector rotate(const Paravector& g, const RotationAxis& axis,
                  Orientation o = Orientation::Left);

/// [cos phi ; i n sin phi]
RotationAxis spatial_axis(const SpatialRotation& r, const Tolerance& tol = {});

/// Embeds w as [0; w], rotates (left orientation) and returns the real vector part.
Vec3 rotate_vector(const Vec3& w, const SpatialRotation& r, const Tolerance& tol = {});

struct EulerComposition {
  SpatialRotation rotation;
  /// False when sin(phi) ~ 0: the product is +-1 and carries no axis.
  bool axis_defined = true;
};

/// Product of the two axis paravectors, read back as (n, phi) with phi in [0, pi].
/// An undefined axis is reported as n = e3 with axis_defined = false.
EulerComposition euler_compose(const SpatialRotation& r1, const SpatialRotation& r2,
                               const Tolerance& tol = {});

/// (1 / -w.w) [0;w] G [0;w]. Throws IsotropicNormal when w.w ~ 0.
Paravector mirror(const Paravector& g, const CVector3& w, const Tolerance& tol = {});

/// Axis L with rotate(G, L, Left) == mirror(mirror(G, w1), w2):
///   [w1.w2 ; i w1 x w2] / sqrt((w1.w2)^2 + (w1 x w2)^2)
RotationAxis compose_mirrors(const CVector3& w1, const CVector3& w2, const Tolerance& tol = {});

/// Straight-angle rotation about w: (1 / w.w) [0;-iw] G [0;iw].
Paravector axial_symmetry(const Paravector& g, const CVector3& w, const Tolerance& tol = {});

/// det(L) ~ 1.
bool is_orthogonal_transform(const Paravector& l, const Tolerance& tol = {});

}  // namespace pv
