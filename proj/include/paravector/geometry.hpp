#pragma once

#include "paravector/core.hpp"
#include "paravector/products.hpp"

namespace pv {

// Relations between paravectors. Thresholds scale with the product of the
// operands' largest components, so G is perpendicular to itself exactly when
// classify(G) reports it singular.

/// Vector product vanishes. Both operands must be non-singular.
bool is_parallel(const Paravector& g1, const Paravector& g2, const Tolerance& tol = {});
/// Scalar product vanishes. Both operands must be non-singular.
bool is_perpendicular(const Paravector& g1, const Paravector& g2, const Tolerance& tol = {});
/// B1 x B2 vanishes.
bool is_spatially_parallel(const Paravector& g1, const Paravector& g2, const Tolerance& tol = {});
/// Both singular and G1 G2^- vanishes.
bool is_singularly_parallel(const Paravector& g1, const Paravector& g2, const Tolerance& tol = {});

/// A paravector-valued angle: an orthogonal paravector (det = 1) with an
/// orientation. The scalar part is the cosinis; the vector part is the sinis
/// (left angles) or dextis (right angles).
class Angle {
 public:
  /// Throws NotOrthogonal unless det(value) ~ 1.
  Angle(const Paravector& value, Orientation o, const Tolerance& tol = {});

  static Angle zero(Orientation o) { return Angle(Paravector::one(), o, Unchecked{}); }

  const Paravector& value() const { return value_; }
  Orientation orientation() const { return orientation_; }

  Complex cosinis() const { return value_.scalar(); }
  const CVector3& sinis() const { return value_.vector(); }
  const CVector3& dextis() const { return value_.vector(); }

 private:
  struct Unchecked {};
  Angle(const Paravector& value, Orientation o, Unchecked) : value_(value), orientation_(o) {}

  friend Angle angle(const Paravector&, const Paravector&, Orientation, const Tolerance&);
  friend Angle compose_angles(const Angle&, const Angle&);
  friend Angle explement(const Angle&);

  Paravector value_;
  Orientation orientation_;
};

/// Integrated product divided by |G1||G2|. Operands must be proper.
Angle angle(const Paravector& g1, const Paravector& g2, Orientation o, const Tolerance& tol = {});
/// P Q; throws OrientationMismatch for mixed orientations.
Angle compose_angles(const Angle& p, const Angle& q);
/// Reversed angle: cosinis kept, sinis/dextis negated.
Angle explement(const Angle& p);

}  // namespace pv
