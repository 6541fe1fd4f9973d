#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// the paravector product: products go through the 4x4 left-multiplication
// matrix applied to a column, and rotations through Rodrigues' formula.

#include <cmath>

#include "paravector/core.hpp"
#include "paravector/matrix_rep.hpp"

namespace oracle {

using pv::Complex;
using pv::CVector3;
using pv::Paravector;
using pv::Vec3;

inline Paravector P(Complex s, Complex x = 0.0, Complex y = 0.0, Complex z = 0.0) {
  return Paravector(s, CVector3(x, y, z));
}

inline constexpr Complex I{0.0, 1.0};

/// M(a) (a2, Bx2, By2, Bz2)^T read back as a paravector.
inline Paravector product(const Paravector& a, const Paravector& b) {
  const pv::Matrix4 m = pv::to_matrix4(a);
  const Complex col[4] = {b.scalar(), b.vector().x(), b.vector().y(), b.vector().z()};
  Complex r[4];
  for (int i = 0; i < 4; ++i) {
    r[i] = 0.0;
    for (int k = 0; k < 4; ++k) r[i] += m(i, k) * col[k];
  }
  return Paravector(r[0], CVector3(r[1], r[2], r[3]));
}

inline Vec3 rodrigues(const Vec3& w, const Vec3& n, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double nw = n[0] * w[0] + n[1] * w[1] + n[2] * w[2];
  const Vec3 nxw{n[1] * w[2] - n[2] * w[1], n[2] * w[0] - n[0] * w[2], n[0] * w[1] - n[1] * w[0]};
  Vec3 out;
  for (int k = 0; k < 3; ++k) out[k] = w[k] * c + nxw[k] * s + n[k] * nw * (1.0 - c);
  return out;
}

inline bool close(const Paravector& a, const Paravector& b, double eps = 1e-12) {
  const auto x = a.components(), y = b.components();
  for (std::size_t k = 0; k < 8; ++k)
    if (std::abs(x[k] - y[k]) > eps) return false;
  return true;
}

inline bool close(Complex a, Complex b, double eps = 1e-12) { return std::abs(a - b) <= eps; }

inline bool close(const Vec3& a, const Vec3& b, double eps = 1e-12) {
  for (int k = 0; k < 3; ++k)
    if (std::abs(a[k] - b[k]) > eps) return false;
  return true;
}

}  // namespace oracle
