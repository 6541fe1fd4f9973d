#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "paravector/transforms.hpp"

using namespace pv;
using oracle::close;
using oracle::I;
using oracle::P;

namespace {

SpatialRotation about(Vec3 n, double phi) {
  SpatialRotation r;
  r.n = n;
  r.phi = phi;
  return r;
}

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("similarity") {
  const Paravector g = P({0.3, -1.2}, {1.5, 0.25}, {-0.75, 2}, {0.1, -0.4});
  CHECK(close(similarity(g, P({2, -1})), g, 1e-14));

  const double t = kPi / 4.0;
  const Paravector f = P(std::cos(t), 0.0, 0.0, I * std::sin(t));
  CHECK(close(similarity(P(0.0, 1.0), f), P(0.0, 0.0, 1.0), 1e-15));

  const Paravector h = P(1.0, 2.0, {0, 1}, -1.0);
  CHECK(close(similarity(g, h).scalar(), g.scalar(), 1e-13));
  CHECK_THROWS_AS((void)similarity(g, P(1.0, 1.0)), Error);
}

TEST_CASE("rotation") {
  const Paravector g = P({0.3, -1.2}, {1.5, 0.25}, {-0.75, 2}, {0.1, -0.4});
  CHECK(rotate(g, RotationAxis{}) == g);

  const RotationAxis quarter = spatial_axis(about({0, 0, 1}, kPi / 4.0));
  CHECK(close(rotate(P(0.0, 1.0), quarter, Orientation::Left), P(0.0, 0.0, 1.0), 1e-15));
  // the right orientation turns the other way
  CHECK(close(rotate(P(0.0, 1.0), quarter, Orientation::Right), P(0.0, 0.0, -1.0), 1e-15));

  const RotationAxis axis = RotationAxis::from_proper(P(2.0, 1.0, {0, 1}, 0.5));
  const Paravector along = P({1, 1}, Complex(3.0, -2.0) * axis.value().vector()[0],
                             Complex(3.0, -2.0) * axis.value().vector()[1],
                             Complex(3.0, -2.0) * axis.value().vector()[2]);
  CHECK(close(rotate(along, axis, Orientation::Left), along, 1e-13));
  CHECK(close(rotate(along, axis, Orientation::Right), along, 1e-13));
}

TEST_CASE("rotation axes") {
  CHECK(close(spatial_axis(about({0, 0, 1}, 0.0)).value(), Paravector::one()));
  CHECK(close(spatial_axis(about({0, 0, 1}, kPi / 2.0)).value(), P(0.0, 0.0, 0.0, I), 1e-16));
  CHECK(close(det(spatial_axis(about({0.6, 0.0, 0.8}, 1.1)).value()), 1.0));
  CHECK_THROWS_AS((void)spatial_axis(about({1, 1, 0}, 0.3)), Error);
  CHECK_THROWS_AS((void)RotationAxis::from_orthogonal(P(2.0)), Error);
  CHECK_THROWS_AS((void)RotationAxis::from_proper(P(1.0, 1.0)), Error);
}

TEST_CASE("spatial vector rotation matches Rodrigues") {
  CHECK(close(rotate_vector({1, 0, 0}, about({0, 0, 1}, kPi / 4.0)), Vec3{0, 1, 0}, 1e-15));
  const Vec3 n{0.0, 0.6, 0.8};
  CHECK(close(rotate_vector({0, 1.5, 2.0}, about(n, 0.7)), Vec3{0, 1.5, 2.0}, 1e-15));
  const Vec3 w{0.3, -1.7, 0.9};
  const Vec3 r = rotate_vector(w, about(n, 0.7));
  CHECK(close(r, oracle::rodrigues(w, n, 1.4), 1e-14));
  CHECK(norm(r) == doctest::Approx(norm(w)).epsilon(1e-14));
}

TEST_CASE("Euler composition") {
  const EulerComposition quarter = euler_compose(about({0, 0, 1}, kPi / 4.0), about({0, 0, 1}, kPi / 4.0));
  CHECK(quarter.axis_defined);
  CHECK(close(quarter.rotation.n, Vec3{0, 0, 1}));
  CHECK(quarter.rotation.phi == doctest::Approx(kPi / 2.0).epsilon(1e-15));

  const EulerComposition undone = euler_compose(about({0.6, 0, 0.8}, 0.9), about({0.6, 0, 0.8}, -0.9));
  CHECK_FALSE(undone.axis_defined);
  CHECK(undone.rotation.phi == 0.0);

  // product of {0|i e1} and {0|i e2}, evaluated with the matrix oracle
  const Paravector a = spatial_axis(about({1, 0, 0}, kPi / 2.0)).value();
  const Paravector b = spatial_axis(about({0, 1, 0}, kPi / 2.0)).value();
  const Paravector ab = oracle::product(a, b);
  CHECK(close(ab, P(0.0, 0.0, 0.0, -I), 1e-15));
  const EulerComposition e = euler_compose(about({1, 0, 0}, kPi / 2.0), about({0, 1, 0}, kPi / 2.0));
  CHECK(e.axis_defined);
  CHECK(close(e.rotation.n, Vec3{0, 0, -1}, 1e-15));
  CHECK(e.rotation.phi == doctest::Approx(kPi / 2.0).epsilon(1e-15));
}

TEST_CASE("mirror symmetry") {
  const CVector3 ie3(0.0, 0.0, I);
  CHECK(close(mirror(P(0.0, I, 2.0 * I, 3.0 * I), ie3), P(0.0, I, 2.0 * I, -3.0 * I), 1e-15));

  const Paravector g = P({0.3, -1.2}, {1.5, 0.25}, {-0.75, 2}, {0.1, -0.4});
  const CVector3 n(0.0, I * 0.6, I * 0.8);
  CHECK(close(mirror(mirror(g, n), n), g, 1e-14));
  CHECK(close(mirror(g, n).scalar(), -g.scalar(), 1e-15));
  CHECK_THROWS_AS((void)mirror(g, CVector3(1.0, I, 0.0)), Error);
}

TEST_CASE("mirror composition") {
  const CVector3 e1(1.0, 0.0, 0.0), e2(0.0, 1.0, 0.0), e3(0.0, 0.0, 1.0);
  CHECK(close(compose_mirrors(e3, e3).value(), Paravector::one()));
  CHECK(close(compose_mirrors(e1, e2).value(), P(0.0, 0.0, 0.0, I)));

  const Paravector g = P({0.3, -1.2}, {1.5, 0.25}, {-0.75, 2}, {0.1, -0.4});
  const CVector3 w1(1.0, {0, 2}, -0.5), w2({0.5, 1}, 1.0, 2.0);
  CHECK(close(rotate(g, compose_mirrors(w1, w2)), mirror(mirror(g, w1), w2), 1e-12));
  CHECK_THROWS_AS((void)compose_mirrors(CVector3(1.0, I, 0.0), e1), Error);
}

TEST_CASE("axial symmetry") {
  const CVector3 e3(0.0, 0.0, 1.0);
  const Complex a{0.7, -0.2};
  CHECK(close(axial_symmetry(P(a, 1.0, 2.0, 3.0), e3), P(a, -1.0, -2.0, 3.0), 1e-15));

  const Paravector g = P({0.3, -1.2}, {1.5, 0.25}, {-0.75, 2}, {0.1, -0.4});
  const CVector3 w({1, 0.5}, -2.0, {0, 1});
  CHECK(close(axial_symmetry(axial_symmetry(g, w), w), g, 1e-13));
  const Paravector along(g.scalar(), Complex(0.5, 1.5) * w);
  CHECK(close(axial_symmetry(along, w), along, 1e-13));
}

TEST_CASE("orthogonal transformations") {
  CHECK(is_orthogonal_transform(Paravector::one()));
  CHECK_FALSE(is_orthogonal_transform(P(2.0, 1.0)));
  CHECK(is_orthogonal_transform(normalize(P(2.0, 1.0))));
}
