#pragma once

/**
 * Paravectors: pairs of a complex scalar and a complex 3-vector,
 *
 *     G = [ a + i d ; b + i c ]
 *
 * with the associative, non-commutative product
 *
 *     [a1; B1][a2; B2] = [ a1 a2 + B1.B2 ; a2 B1 + a1 B2 + i B1 x B2 ]
 *
 * where "." and "x" are the unconjugated dot and cross products over C^3.
 * Everything here is a value type; all operations are pure.
 */

#include <array>
#include <complex>
#include <cstddef>
#include <span>

#include "paravector/error.hpp"

namespace pv {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Combined absolute/relative tolerance: |x| <= abs + rel * scale.
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  constexpr Tolerance() = default;
  Tolerance(double abs_tol, double rel_tol);

  /// Both components set to the same value (CLI --tol / PV_TOL).
  static Tolerance uniform(double value) { return Tolerance(value, value); }

  bool accepts(double magnitude, double scale) const noexcept {
    return magnitude <= abs + rel * scale;
  }
};

class CVector3 {
 public:
  constexpr CVector3() = default;
  CVector3(Complex x, Complex y, Complex z);

  static CVector3 from_parts(const Vec3& real, const Vec3& imag);

  const Complex& operator[](std::size_t k) const { return c_[k]; }
  const Complex& x() const { return c_[0]; }
  const Complex& y() const { return c_[1]; }
  const Complex& z() const { return c_[2]; }

  Vec3 real() const { return {c_[0].real(), c_[1].real(), c_[2].real()}; }
  Vec3 imag() const { return {c_[0].imag(), c_[1].imag(), c_[2].imag()}; }

  bool operator==(const CVector3&) const = default;

 private:
  std::array<Complex, 3> c_{};
};

CVector3 operator+(const CVector3& u, const CVector3& v);
CVector3 operator-(const CVector3& u, const CVector3& v);
CVector3 operator-(const CVector3& u);
CVector3 operator*(Complex k, const CVector3& u);
CVector3 operator*(const CVector3& u, Complex k);
CVector3 operator/(const CVector3& u, Complex k);

/// Bilinear (unconjugated) dot product.
Complex dot(const CVector3& u, const CVector3& v);
CVector3 cross(const CVector3& u, const CVector3& v);
CVector3 conj(const CVector3& u);
double max_abs(const CVector3& u);

class Paravector {
 public:
  /// The null paravector.
  constexpr Paravector() = default;
  explicit Paravector(Complex scalar, const CVector3& vector = {});

  /// Components in wire order (a, d, bx, by, bz, cx, cy, cz).
  static Paravector from_components(std::span<const double, 8> c);
  std::array<double, 8> components() const;

  static Paravector one() { return Paravector(Complex(1.0, 0.0)); }

  const Complex& scalar() const { return s_; }
  const CVector3& vector() const { return v_; }

  /// Exact structural equality; use approx_eq for numerics.
  bool operator==(const Paravector&) const = default;

 private:
  Complex s_{};
  CVector3 v_{};
};

Paravector operator+(const Paravector& p, const Paravector& q);
Paravector operator-(const Paravector& p, const Paravector& q);
Paravector operator-(const Paravector& p);
Paravector operator*(const Paravector& p, const Paravector& q);
/// Multiplication by a complex number, i.e. by {k|0}; scalars commute.
Paravector operator*(Complex k, const Paravector& p);
Paravector operator*(const Paravector& p, Complex k);
Paravector operator/(const Paravector& p, Complex k);

inline Paravector add(const Paravector& p, const Paravector& q) { return p + q; }
inline Paravector mul(const Paravector& p, const Paravector& q) { return p * q; }

/// Reversion: [a; B] -> [a; -B].
Paravector rev(const Paravector& p);
/// Complex conjugation of every component.
Paravector conj(const Paravector& p);
/// G G*; a real paravector with scalar a^2+b^2+c^2+d^2.
Paravector vigor(const Paravector& p);
/// G G^- = a^2 - B.B.
Complex det(const Paravector& p);

/// Largest absolute value among the 8 real components.
double max_abs(const Paravector& p);

/// Threshold below which |det p| counts as zero: abs + rel * scale^2.
double det_threshold(const Paravector& p, const Tolerance& tol);

/// rev(p) / det(p). Throws SingularParavector when |det| <= det_threshold.
Paravector inverse(const Paravector& p, const Tolerance& tol = {});
/// sqrt(det) for proper or singular paravectors; ImproperParavector otherwise.
double modulus(const Paravector& p, const Tolerance& tol = {});
/// p / |p|. Requires a proper paravector (singular input is an error).
Paravector normalize(const Paravector& p, const Tolerance& tol = {});

struct Classification {
  Complex det;
  bool is_proper = false;
  bool is_singular = false;
  bool is_orthogonal = false;
  bool is_special = false;
  bool is_unitar = false;
  Tolerance tol;
};

Classification classify(const Paravector& p, const Tolerance& tol = {});

/// Component-wise |p_k - q_k| <= abs + rel * max(max_abs(p), max_abs(q)).
bool approx_eq(const Paravector& p, const Paravector& q, const Tolerance& tol = {});
bool approx_eq(const CVector3& u, const CVector3& v, const Tolerance& tol = {});
bool approx_eq(Complex x, Complex y, const Tolerance& tol = {});

// Real 3-vector helpers.
double dot(const Vec3& u, const Vec3& v);
Vec3 cross(const Vec3& u, const Vec3& v);
double norm(const Vec3& u);

}  // namespace pv
