// The property catalogue run by the fuzzer. Each entry draws its own inputs
// and returns Pass, Fail (with the inputs as witness) or Skip when the drawn
// inputs miss the law's precondition.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "paravector/fuzz.hpp"
#include "paravector/geometry.hpp"
#include "paravector/matrix_rep.hpp"
#include "paravector/products.hpp"
#include "paravector/transforms.hpp"

namespace pv::fuzz {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr std::array kOrientations{Orientation::Right, Orientation::Left};

Outcome verdict(bool ok, std::vector<Paravector> witness) {
  return {ok ? Verdict::Pass : Verdict::Fail, std::move(witness)};
}

Outcome skip() { return {}; }

double sc(const Paravector& g) { return std::max(1.0, max_abs(g)); }

/// Component-wise closeness; `scale` is the magnitude of the operands that
/// produced x and y (errors grow with it even when x and y are small).
bool near(const Paravector& x, const Paravector& y, const Tolerance& tol, double scale = 0.0) {
  const double s = std::max({scale, max_abs(x), max_abs(y)});
  const auto a = x.components();
  const auto b = y.components();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!tol.accepts(std::abs(a[k] - b[k]), s)) return false;
  }
  return true;
}

bool near(Complex x, Complex y, const Tolerance& tol, double scale = 0.0) {
  return near(Paravector(x), Paravector(y), tol, scale);
}

bool near(const CVector3& x, const CVector3& y, const Tolerance& tol, double scale = 0.0) {
  return near(Paravector(Complex{}, x), Paravector(Complex{}, y), tol, scale);
}

bool near(const Vec3& x, const Vec3& y, const Tolerance& tol, double scale = 0.0) {
  return near(CVector3::from_parts(x, {}), CVector3::from_parts(y, {}), tol, scale);
}

bool non_singular(const Paravector& g, const Tolerance& tol) {
  return std::abs(det(g)) > det_threshold(g, tol);
}

Paravector real_embedding(const Vec3& w) { return Paravector(Complex{}, CVector3::from_parts(w, {})); }
Paravector imaginary_embedding(const Vec3& w) {
  return Paravector(Complex{}, CVector3::from_parts({}, w));
}
CVector3 as_cvector(const Vec3& w) { return CVector3::from_parts(w, {}); }

/// c - (<g,c> / det g) g, which is perpendicular to g; nullopt if singular.
std::optional<Paravector> perpendicular_to(const Paravector& g, const Paravector& c,
                                           const Tolerance& tol) {
  const Paravector b = c - (scalar_product(g, c) / det(g)) * g;
  if (!non_singular(b, tol)) return std::nullopt;
  return b;
}

/// A normal vector comfortably away from the isotropic cone.
std::optional<CVector3> normal(Sampler& s) {
  const CVector3 w = s.complex_vector();
  if (std::abs(dot(w, w)) < 0.1) return std::nullopt;
  return w;
}

Vec3 rodrigues(const Vec3& w, const Vec3& n, double theta) {
  const double c = std::cos(theta);
  const double si = std::sin(theta);
  const Vec3 nxw = cross(n, w);
  const double nw = dot(n, w);
  return {w[0] * c + nxw[0] * si + n[0] * nw * (1.0 - c),
          w[1] * c + nxw[1] * si + n[1] * nw * (1.0 - c),
          w[2] * c + nxw[2] * si + n[2] * nw * (1.0 - c)};
}

template <std::size_t N>
bool near(const SquareMatrix<N>& a, const SquareMatrix<N>& b, const Tolerance& tol,
          double scale = 0.0) {
  const double s = std::max({scale, max_abs(a), max_abs(b)});
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const Complex d = a(i, j) - b(i, j);
      if (!tol.accepts(std::max(std::abs(d.real()), std::abs(d.imag())), s)) return false;
    }
  return true;
}

std::vector<Property> build() {
  std::vector<Property> out;
  const auto add = [&out](std::string name, int criterion,
                          std::function<Outcome(Sampler&, const Tolerance&)> fn) {
    out.push_back({std::move(name), criterion, std::move(fn)});
  };

  // --- ring axioms and involutions ------------------------------------------

  add("ring.add_associative", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general(), c = s.general();
    return verdict(near((a + b) + c, a + (b + c), tol), {a, b, c});
  });
  add("ring.add_commutative", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    return verdict(near(a + b, b + a, tol), {a, b});
  });
  add("ring.add_neutral_and_opposite", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    return verdict(a + Paravector{} == a && near(a + (-a), Paravector{}, tol, sc(a)), {a});
  });
  add("ring.mul_associative", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general(), c = s.general();
    return verdict(near((a * b) * c, a * (b * c), tol, sc(a) * sc(b) * sc(c)), {a, b, c});
  });
  add("ring.mul_neutral", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    return verdict(near(Paravector::one() * a, a, tol) && near(a * Paravector::one(), a, tol), {a});
  });
  add("ring.distributive_left", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general(), c = s.general();
    return verdict(near(a * (b + c), a * b + a * c, tol, sc(a) * (sc(b) + sc(c))), {a, b, c});
  });
  add("ring.distributive_right", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general(), c = s.general();
    return verdict(near((a + b) * c, a * c + b * c, tol, (sc(a) + sc(b)) * sc(c)), {a, b, c});
  });
  add("involution.rev_rev", 1, [](Sampler& s, const Tolerance&) {
    const Paravector a = s.general();
    return verdict(rev(rev(a)) == a, {a});
  });
  add("involution.conj_conj", 1, [](Sampler& s, const Tolerance&) {
    const Paravector a = s.general();
    return verdict(conj(conj(a)) == a, {a});
  });
  add("involution.rev_additive", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    return verdict(near(rev(a + b), rev(a) + rev(b), tol), {a, b});
  });
  add("involution.conj_additive", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    return verdict(near(conj(a + b), conj(a) + conj(b), tol), {a, b});
  });
  add("involution.rev_antimultiplicative", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    return verdict(near(rev(a * b), rev(b) * rev(a), tol, sc(a) * sc(b)), {a, b});
  });
  add("involution.conj_antimultiplicative", 1, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    return verdict(near(conj(a * b), conj(b) * conj(a), tol, sc(a) * sc(b)), {a, b});
  });
  add("involution.rev_conj_commute", 1, [](Sampler& s, const Tolerance&) {
    const Paravector a = s.general();
    return verdict(conj(rev(a)) == rev(conj(a)), {a});
  });

  // --- determinant, vigor, module -------------------------------------------

  add("det.closed_form", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const auto c = g.components();
    const Vec3 b{c[2], c[3], c[4]};
    const Vec3 cc{c[5], c[6], c[7]};
    const Complex expected(c[0] * c[0] - dot(b, b) + dot(cc, cc) - c[1] * c[1],
                           2.0 * (c[0] * c[1] - dot(b, cc)));
    return verdict(near(det(g), expected, tol, sc(g) * sc(g)), {g});
  });
  add("det.vector_part_vanishes", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const Paravector right = g * rev(g);
    const Paravector left = rev(g) * g;
    const double scale = sc(g) * sc(g);
    return verdict(near(right, Paravector(det(g)), tol, scale) && near(left, right, tol, scale), {g});
  });
  add("det.multiplicative", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    const double scale = sc(a) * sc(a) * sc(b) * sc(b);
    return verdict(near(det(a * b), det(a) * det(b), tol, scale), {a, b});
  });
  add("det.reversion_and_conjugation", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const double scale = sc(g) * sc(g);
    return verdict(near(det(rev(g)), det(g), tol, scale) &&
                       near(det(conj(g)), std::conj(det(g)), tol, scale),
                   {g});
  });
  add("vigor.closed_form", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const auto c = g.components();
    const double a = c[0], d = c[1];
    const Vec3 b{c[2], c[3], c[4]};
    const Vec3 cc{c[5], c[6], c[7]};
    const Vec3 bxc = cross(b, cc);
    const Paravector expected(
        a * a + dot(b, b) + dot(cc, cc) + d * d,
        CVector3::from_parts({2.0 * (a * b[0] + d * cc[0] + bxc[0]),
                              2.0 * (a * b[1] + d * cc[1] + bxc[1]),
                              2.0 * (a * b[2] + d * cc[2] + bxc[2])},
                             {}));
    return verdict(near(vigor(g), expected, tol, sc(g) * sc(g)), {g});
  });
  add("vigor.real_nonnegative", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const Paravector v = vigor(g);
    const double scale = sc(g) * sc(g);
    const bool real = tol.accepts(std::abs(v.scalar().imag()), scale) &&
                      tol.accepts(max_abs(CVector3::from_parts({}, v.vector().imag())), scale);
    const bool zero_iff_null = (v.scalar().real() == 0.0) == (g == Paravector{});
    return verdict(real && v.scalar().real() >= 0.0 && zero_iff_null, {g});
  });
  add("module.real_scaling", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector p = s.proper();
    const double r = s.uniform(-3.0, 3.0);
    if (std::abs(r) < 1e-3) return skip();
    return verdict(near(modulus(Complex(r, 0.0) * p, tol), std::abs(r) * modulus(p, tol), tol), {p});
  });
  add("module.multiplicative", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector p = s.proper();
    const Paravector q = s.chance(0.2) ? s.singular() : s.proper();
    return verdict(near(modulus(p, tol) * modulus(q, tol), modulus(p * q, tol), tol), {p, q});
  });
  add("inverse.roundtrip", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    if (!non_singular(g, tol)) return skip();
    const Paravector inv = inverse(g, tol);
    const double scale = sc(g) * sc(inv);
    return verdict(near(g * inv, Paravector::one(), tol, scale) &&
                       near(inv * g, Paravector::one(), tol, scale),
                   {g});
  });
  add("inverse.singular_rejected", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector q = s.singular();
    try {
      (void)inverse(q, tol);
    } catch (const Error& e) {
      return verdict(e.code() == ErrorCode::SingularParavector, {q});
    }
    return verdict(false, {q});
  });
  add("orthogonal.inverse_is_reverse", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector l = s.orthogonal();
    return verdict(near(inverse(l, tol), rev(l), tol, sc(l)), {l});
  });
  add("normalize.orthogonal", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector p = s.proper();
    const Paravector n = normalize(p, tol);
    return verdict(classify(n, tol).is_orthogonal && near(det(n), Complex(1.0), tol, sc(n) * sc(n)),
                   {p});
  });
  add("special.division_ring", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.special(), b = s.special();
    bool ok = classify(a + b, tol).is_special && classify(a * b, tol).is_special;
    if (a != Paravector{}) {
      const Classification c = classify(a, tol);
      ok = ok && c.is_proper && classify(inverse(a, tol), tol).is_special;
    }
    return verdict(ok, {a, b});
  });
  add("singular.absorbs_products", 2, [](Sampler& s, const Tolerance& tol) {
    const Paravector q = s.singular(), a = s.general();
    return verdict(classify(q * a, tol).is_singular && classify(a * q, tol).is_singular, {q, a});
  });
  add("classify.invariants", 2, [](Sampler& s, const Tolerance& tol) {
    const double pick = s.uniform(0.0, 3.0);
    const Paravector g = pick < 1.0 ? s.general() : pick < 2.0 ? s.singular() : s.proper();
    const Classification c = classify(g, tol);
    const auto k = g.components();
    const double eq11 = std::abs(k[0] * k[1] - (k[2] * k[5] + k[3] * k[6] + k[4] * k[7]));
    bool ok = !(c.is_proper && c.is_singular) && (!c.is_orthogonal || c.is_proper);
    if (c.is_proper || c.is_singular) ok = ok && eq11 <= det_threshold(g, tol);
    return verdict(ok, {g});
  });

  // --- integrated, scalar and vector products --------------------------------

  add("integrated.det_is_product_of_dets", 3, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    const Complex expected = det(a) * det(b);
    const double scale = sc(a) * sc(a) * sc(b) * sc(b);
    bool ok = true;
    for (Orientation o : kOrientations) {
      const Complex sp = integrated(a, b, o).value.scalar();
      const CVector3 vp = vector_product(a, b, o);
      ok = ok && near(det(integrated(a, b, o).value), expected, tol, scale) &&
           near(sp * sp - dot(vp, vp), expected, tol, scale);
    }
    return verdict(ok, {a, b});
  });
  add("integrated.scalar_parts_agree", 3, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    const Complex right = integrated(a, b, Orientation::Right).value.scalar();
    const Complex left = integrated(a, b, Orientation::Left).value.scalar();
    const double scale = sc(a) * sc(b);
    return verdict(near(right, left, tol, scale) && near(right, scalar_product(a, b), tol, scale),
                   {a, b});
  });
  add("integrated.additive", 3, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general(), c = s.general();
    bool ok = true;
    for (Orientation o : kOrientations) {
      ok = ok && near(integrated(a + b, c, o).value,
                      integrated(a, c, o).value + integrated(b, c, o).value, tol,
                      (sc(a) + sc(b)) * sc(c));
    }
    return verdict(ok, {a, b, c});
  });
  add("integrated.homogeneous", 3, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    const Complex lambda = s.complex();
    const double scale = 4.0 * sc(a) * sc(b);
    bool ok = true;
    for (Orientation o : kOrientations) {
      const Paravector scaled = lambda * integrated(a, b, o).value;
      ok = ok && near(integrated(lambda * a, b, o).value, scaled, tol, scale) &&
           near(integrated(a, lambda * b, o).value, scaled, tol, scale);
    }
    return verdict(ok, {a, b, Paravector(lambda)});
  });
  add("integrated.reversal_swaps_operands", 3, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    bool ok = true;
    for (Orientation o : kOrientations) {
      ok = ok && near(rev(integrated(a, b, o).value), integrated(b, a, o).value, tol, sc(a) * sc(b));
    }
    return verdict(ok, {a, b});
  });
  add("integrated.self_is_det", 3, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    bool ok = true;
    for (Orientation o : kOrientations) {
      ok = ok && near(integrated(g, g, o).value, Paravector(det(g)), tol, sc(g) * sc(g));
    }
    return verdict(ok, {g});
  });
  add("scalar.symmetric", 3, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    return verdict(near(scalar_product(a, b), scalar_product(b, a), tol, sc(a) * sc(b)), {a, b});
  });
  add("scalar.self_zero_implies_singular", 3, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.chance(0.5) ? s.singular() : s.general();
    if (std::abs(scalar_product(g, g)) > det_threshold(g, tol)) return verdict(true, {g});
    return verdict(classify(g, tol).is_singular, {g});
  });
  add("vector.cross_orientation_on_real", 3, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.real_paravector(), b = s.real_paravector();
    return verdict(near(vector_product(a, b, Orientation::Right),
                        -conj(vector_product(a, b, Orientation::Left)), tol, sc(a) * sc(b)),
                   {a, b});
  });
  add("scalar.vector_embeddings", 3, [](Sampler& s, const Tolerance& tol) {
    const Vec3 w1 = s.real_vector(), w2 = s.real_vector();
    const double d = dot(w1, w2);
    const Paravector i1 = imaginary_embedding(w1), i2 = imaginary_embedding(w2);
    const Paravector r1 = real_embedding(w1), r2 = real_embedding(w2);
    return verdict(near(scalar_product(i1, i2), Complex(d), tol, 4.0) &&
                       near(scalar_product(r1, r2), Complex(-d), tol, 4.0),
                   {i1, i2});
  });

  // --- parallelism and perpendicularity --------------------------------------

  add("parallel.scalar_multiple_is_parallel", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    const Complex lambda = s.nonzero_complex();
    const Paravector b = lambda * a;
    if (!non_singular(a, tol) || !non_singular(b, tol)) return skip();
    return verdict(is_parallel(a, b, tol) && is_parallel(b, a, tol), {a, b});
  });
  add("parallel.implies_scalar_multiple", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    const Paravector b = s.chance(0.5) ? s.nonzero_complex() * a : s.general();
    if (!non_singular(a, tol) || !non_singular(b, tol)) return skip();
    if (!is_parallel(a, b, tol)) return verdict(true, {a, b});
    // pivot on the largest complex component of b
    const std::array<Complex, 4> ca{a.scalar(), a.vector()[0], a.vector()[1], a.vector()[2]};
    const std::array<Complex, 4> cb{b.scalar(), b.vector()[0], b.vector()[1], b.vector()[2]};
    std::size_t k = 0;
    for (std::size_t j = 1; j < 4; ++j)
      if (std::abs(cb[j]) > std::abs(cb[k])) k = j;
    const Complex lambda = ca[k] / cb[k];
    return verdict(lambda != Complex{} && near(a, lambda * b, tol, sc(a) + sc(b)), {a, b});
  });
  add("parallel.equivalence_relation", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    const Paravector b = s.nonzero_complex() * a;
    const Paravector c = s.nonzero_complex() * b;
    if (!non_singular(a, tol) || !non_singular(b, tol) || !non_singular(c, tol)) return skip();
    return verdict(is_parallel(a, a, tol) && is_parallel(a, b, tol) && is_parallel(b, a, tol) &&
                       is_parallel(b, c, tol) && is_parallel(a, c, tol),
                   {a, b, c});
  });
  add("parallel.implies_spatially_parallel", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    const Paravector b = s.chance(0.5) ? s.nonzero_complex() * a : s.general();
    if (!non_singular(a, tol) || !non_singular(b, tol)) return skip();
    return verdict(!is_parallel(a, b, tol) || is_spatially_parallel(a, b, tol), {a, b});
  });
  add("perpendicular.irreflexive", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    if (!non_singular(a, tol)) return skip();
    return verdict(!is_perpendicular(a, a, tol), {a});
  });
  add("perpendicular.self_iff_singular", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.chance(0.5) ? s.singular() : s.general();
    const bool self_perpendicular = std::abs(scalar_product(g, g)) <= det_threshold(g, tol);
    return verdict(self_perpendicular == classify(g, tol).is_singular, {g});
  });
  add("perpendicular.symmetric", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    if (!non_singular(a, tol)) return skip();
    const auto b = perpendicular_to(a, s.general(), tol);
    if (!b) return skip();
    return verdict(is_perpendicular(a, *b, tol) && is_perpendicular(*b, a, tol), {a, *b});
  });
  add("perpendicular.transported_along_parallel", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    if (!non_singular(a, tol)) return skip();
    const auto b = perpendicular_to(a, s.general(), tol);
    if (!b) return skip();
    const Paravector c = s.nonzero_complex() * *b;
    if (!non_singular(c, tol)) return skip();
    return verdict(is_parallel(*b, c, tol) && is_perpendicular(a, c, tol), {a, *b, c});
  });
  add("orthogonal.parallel_iff_equal_or_opposite", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector l1 = s.orthogonal();
    Paravector l2;
    if (s.chance(0.5)) {
      const Complex lambda = s.nonzero_complex();
      l2 = (lambda * l1) / std::sqrt(lambda * lambda);
    } else {
      l2 = s.orthogonal();
    }
    const bool same = near(l1, l2, tol) || near(l1, -l2, tol);
    return verdict(is_parallel(l1, l2, tol) == same, {l1, l2});
  });
  add("conjugation.preserves_relations", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    if (!non_singular(a, tol)) return skip();
    const auto b = perpendicular_to(a, s.general(), tol);
    const Paravector c = s.nonzero_complex() * a;
    if (!b || !non_singular(c, tol)) return skip();
    const Paravector va = vigor(a), vc = vigor(c);
    if (!non_singular(va, tol) || !non_singular(vc, tol)) return skip();
    return verdict(is_perpendicular(conj(a), conj(*b), tol) && is_parallel(conj(a), conj(c), tol) &&
                       is_parallel(va, vc, tol),
                   {a, *b, c});
  });
  add("singular_parallel.reflexive_symmetric", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector q = s.singular();
    const Paravector r = s.nonzero_complex() * q;
    return verdict(is_singularly_parallel(q, q, tol) && is_singularly_parallel(q, r, tol) &&
                       is_singularly_parallel(r, q, tol),
                   {q, r});
  });
  add("singular_parallel.requires_singular", 4, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), q = s.singular();
    if (!non_singular(a, tol)) return skip();
    return verdict(!is_singularly_parallel(a, q, tol) && !is_singularly_parallel(q, a, tol) &&
                       !is_singularly_parallel(a, a, tol),
                   {a, q});
  });

  // --- polarization, Pythagoras, parallelogram -------------------------------

  add("det.polarization", 5, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    const double scale = (sc(a) + sc(b)) * (sc(a) + sc(b));
    return verdict(near(det(a + b), det(a) + 2.0 * scalar_product(a, b) + det(b), tol, scale), {a, b});
  });
  add("det.pythagoras", 5, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    if (!non_singular(a, tol)) return skip();
    const auto b = perpendicular_to(a, s.general(), tol);
    if (!b) return skip();
    const double scale = (sc(a) + sc(*b)) * (sc(a) + sc(*b));
    return verdict(near(det(a + *b), det(a) + det(*b), tol, scale), {a, *b});
  });
  add("det.parallelogram", 5, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    const double scale = (sc(a) + sc(b)) * (sc(a) + sc(b));
    return verdict(near(det(a + b) + det(a - b), 2.0 * det(a) + 2.0 * det(b), tol, scale), {a, b});
  });

  // --- angles ----------------------------------------------------------------

  add("angle.det_one", 6, [](Sampler& s, const Tolerance& tol) {
    const Paravector p = s.proper(), q = s.proper();
    bool ok = true;
    for (Orientation o : kOrientations) {
      const Paravector v = angle(p, q, o, tol).value();
      ok = ok && near(det(v), Complex(1.0), tol, sc(v) * sc(v));
    }
    return verdict(ok, {p, q});
  });
  add("angle.zero_angle", 6, [](Sampler& s, const Tolerance& tol) {
    const Paravector p = s.proper();
    bool ok = true;
    for (Orientation o : kOrientations) {
      ok = ok && near(angle(p, p, o, tol).value(), Paravector::one(), tol, sc(p) * sc(p));
    }
    return verdict(ok, {p});
  });
  add("angle.composition_rows", 6, [](Sampler& s, const Tolerance& tol) {
    const Paravector p = s.proper(), q = s.proper(), r = s.proper(), t = s.proper();
    bool ok = true;
    for (Orientation o : kOrientations) {
      const Angle f1 = angle(p, q, o, tol), f2 = angle(r, t, o, tol);
      const Complex c1 = f1.cosinis(), c2 = f2.cosinis();
      const CVector3 &s1 = f1.sinis(), &s2 = f2.sinis();
      const Paravector expected(c1 * c2 + dot(s1, s2), c1 * s2 + c2 * s1 + kI * cross(s1, s2));
      const Angle composed = compose_angles(f1, f2);
      ok = ok && composed.orientation() == o &&
           near(composed.value(), expected, tol, sc(f1.value()) * sc(f2.value())) &&
           near(det(composed.value()), Complex(1.0), tol, sc(composed.value()) * sc(composed.value()));
    }
    return verdict(ok, {p, q, r, t});
  });
  add("angle.doubling_rows", 6, [](Sampler& s, const Tolerance& tol) {
    const Paravector p = s.proper(), q = s.proper();
    bool ok = true;
    for (Orientation o : kOrientations) {
      const Angle f = angle(p, q, o, tol);
      const Complex c = f.cosinis();
      const CVector3& si = f.sinis();
      const Paravector expected(c * c + dot(si, si), 2.0 * c * si);
      ok = ok && near(compose_angles(f, f).value(), expected, tol, sc(f.value()) * sc(f.value()));
    }
    return verdict(ok, {p, q});
  });
  add("angle.explement_rows", 6, [](Sampler& s, const Tolerance& tol) {
    const Paravector p = s.proper(), q = s.proper();
    bool ok = true;
    for (Orientation o : kOrientations) {
      const Angle f = angle(p, q, o, tol);
      const Angle e = explement(f);
      ok = ok && e.cosinis() == f.cosinis() && e.sinis() == -f.sinis() &&
           explement(e).value() == f.value() &&
           near(e.value(), angle(q, p, o, tol).value(), tol, sc(f.value()));
    }
    return verdict(ok, {p, q});
  });
  add("angle.chain", 6, [](Sampler& s, const Tolerance& tol) {
    const Paravector p = s.proper(), q = s.proper(), r = s.proper();
    bool ok = true;
    for (Orientation o : kOrientations) {
      const Angle f1 = angle(p, q, o, tol), f2 = angle(q, r, o, tol);
      ok = ok && near(compose_angles(f1, f2).value(), angle(p, r, o, tol).value(), tol,
                      sc(f1.value()) * sc(f2.value()));
    }
    return verdict(ok, {p, q, r});
  });
  add("angle.trigonometric_character", 6, [](Sampler& s, const Tolerance& tol) {
    const Vec3 w1 = s.real_vector(), w2 = s.real_vector();
    const double n1 = norm(w1), n2 = norm(w2);
    if (n1 < 0.2 || n2 < 0.2) return skip();
    const Paravector a = imaginary_embedding(w1), b = imaginary_embedding(w2);
    const Angle f = angle(a, b, Orientation::Right, tol);
    const Vec3 wxw = cross(w1, w2);
    const Paravector expected(dot(w1, w2) / (n1 * n2),
                              CVector3::from_parts({}, {wxw[0] / (n1 * n2), wxw[1] / (n1 * n2),
                                                        wxw[2] / (n1 * n2)}));
    const double c = f.cosinis().real();
    const Vec3 si = f.sinis().imag();
    return verdict(near(f.value(), expected, tol) && near(c * c + dot(si, si), 1.0, tol), {a, b});
  });
  add("angle.hyperbolic_character", 6, [](Sampler& s, const Tolerance& tol) {
    // real proper pair with collinear vector parts: the angle is real
    const Paravector a = s.real_proper();
    const double k = s.uniform(-2.0, 2.0);
    const Vec3 v = a.vector().real();
    const double len = std::abs(k) * norm(v);
    const double sb = (s.chance(0.5) ? 1.0 : -1.0) * (len + s.uniform(0.25, 2.0));
    const Paravector b(sb, as_cvector({k * v[0], k * v[1], k * v[2]}));
    bool ok = true;
    for (Orientation o : kOrientations) {
      const Angle f = angle(a, b, o, tol);
      const double scale = sc(f.value()) * sc(f.value());
      const double c = f.cosinis().real();
      const Vec3 si = f.sinis().real();
      ok = ok && tol.accepts(std::abs(f.cosinis().imag()), scale) &&
           tol.accepts(max_abs(CVector3::from_parts({}, f.sinis().imag())), scale) &&
           near(Complex(c * c - dot(si, si)), Complex(1.0), tol, scale) &&
           std::abs(c) >= 1.0 - tol.abs - tol.rel * scale;
    }
    return verdict(ok, {a, b});
  });

  // --- rotations and similarity ----------------------------------------------

  add("rotation.preserves_det_and_scalar", 7, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const RotationAxis axis = RotationAxis::from_proper(s.proper(), tol);
    const double scale = sc(g) * sc(axis.value()) * sc(axis.value());
    bool ok = true;
    for (Orientation o : kOrientations) {
      const Paravector r = rotate(g, axis, o);
      ok = ok && near(det(r), det(g), tol, scale * scale) && near(r.scalar(), g.scalar(), tol, scale);
    }
    return verdict(ok, {g, axis.value()});
  });
  add("rotation.fixes_spatially_parallel", 7, [](Sampler& s, const Tolerance& tol) {
    const RotationAxis axis = RotationAxis::from_proper(s.proper(), tol);
    const Paravector g(s.complex(), s.complex() * axis.value().vector());
    const double scale = sc(g) * sc(axis.value()) * sc(axis.value());
    bool ok = true;
    for (Orientation o : kOrientations) ok = ok && near(rotate(g, axis, o), g, tol, scale);
    return verdict(ok, {g, axis.value()});
  });
  add("rotation.parallel_axes_agree", 7, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general(), p = s.proper();
    const double k = (s.chance(0.5) ? 1.0 : -1.0) * s.uniform(0.25, 3.0);
    const RotationAxis a1 = RotationAxis::from_proper(p, tol);
    const RotationAxis a2 = RotationAxis::from_proper(Complex(k, 0.0) * p, tol);
    const double scale = sc(g) * sc(a1.value()) * sc(a1.value());
    bool ok = true;
    for (Orientation o : kOrientations) ok = ok && near(rotate(g, a1, o), rotate(g, a2, o), tol, scale);
    return verdict(ok, {g, p});
  });
  add("rotation.rodrigues_oracle", 7, [](Sampler& s, const Tolerance& tol) {
    const Vec3 w = s.real_vector();
    const SpatialRotation r = s.spatial_rotation();
    return verdict(near(rotate_vector(w, r, tol), rodrigues(w, r.n, 2.0 * r.phi), tol, norm(w)),
                   {real_embedding(w), spatial_axis(r, tol).value()});
  });
  add("rotation.preserves_length", 7, [](Sampler& s, const Tolerance& tol) {
    const Vec3 w = s.real_vector();
    const SpatialRotation r = s.spatial_rotation();
    const double len = norm(w);
    return verdict(tol.accepts(std::abs(norm(rotate_vector(w, r, tol)) - len), len),
                   {real_embedding(w), spatial_axis(r, tol).value()});
  });
  add("rotation.spatial_axis_is_special_unitar", 7, [](Sampler& s, const Tolerance& tol) {
    const SpatialRotation r = s.spatial_rotation();
    const Paravector l = spatial_axis(r, tol).value();
    const Classification c = classify(l, tol);
    return verdict(c.is_orthogonal && c.is_special && c.is_unitar, {l});
  });
  add("rotation.angle_decomposition", 7, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.proper();
    const RotationAxis axis = RotationAxis::from_proper(s.proper(), tol);
    const Paravector& l = axis.value();
    const Paravector rotated = rotate(g, axis, Orientation::Left);
    const Paravector lhs = angle(g, rotated, Orientation::Right, tol).value();
    const Paravector rhs = angle(g, l, Orientation::Right, tol).value() *
                           angle(g, l, Orientation::Left, tol).value();
    return verdict(near(lhs, rhs, tol, sc(lhs) * sc(l) * sc(l)), {g, l});
  });
  add("rotation.euler_composition", 7, [](Sampler& s, const Tolerance& tol) {
    const SpatialRotation r1 = s.spatial_rotation(), r2 = s.spatial_rotation();
    const Vec3 w = s.real_vector();
    const EulerComposition e = euler_compose(r1, r2, tol);
    const Vec3 sequential = rotate_vector(rotate_vector(w, r1, tol), r2, tol);
    const Paravector product = spatial_axis(r1, tol).value() * spatial_axis(r2, tol).value();
    bool ok = e.rotation.phi >= 0.0 && e.rotation.phi <= std::numbers::pi &&
              near(rotate_vector(w, e.rotation, tol), sequential, tol, norm(w));
    if (e.axis_defined) ok = ok && near(spatial_axis(e.rotation, tol).value(), product, tol);
    return verdict(ok, {spatial_axis(r1, tol).value(), spatial_axis(r2, tol).value()});
  });
  add("similarity.preserves_scalar", 7, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general(), f = s.general();
    if (!non_singular(f, tol)) return skip();
    const double scale = sc(inverse(f, tol)) * sc(g) * sc(f);
    return verdict(near(similarity(g, f, tol).scalar(), g.scalar(), tol, scale), {g, f});
  });
  add("similarity.equivalence_relation", 7, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general(), f1 = s.general(), f2 = s.general();
    if (!non_singular(f1, tol) || !non_singular(f2, tol)) return skip();
    const Paravector g2 = similarity(g, f1, tol);
    const Paravector i1 = inverse(f1, tol);
    const double scale = sc(g) * sc(f1) * sc(i1) * sc(f2) * sc(inverse(f2, tol));
    const bool reflexive = near(similarity(g, Paravector::one(), tol), g, tol);
    const bool symmetric = near(similarity(g2, i1, tol), g, tol, scale);
    const bool transitive = near(similarity(g2, f2, tol), similarity(g, f1 * f2, tol), tol, scale);
    return verdict(reflexive && symmetric && transitive, {g, f1, f2});
  });
  add("similarity.fixes_spatially_parallel", 7, [](Sampler& s, const Tolerance& tol) {
    const Paravector f = s.general();
    if (!non_singular(f, tol)) return skip();
    const Paravector g(s.complex(), s.complex() * f.vector());
    const double scale = sc(inverse(f, tol)) * sc(g) * sc(f);
    return verdict(near(similarity(g, f, tol), g, tol, scale), {g, f});
  });

  // --- mirror and axial symmetry ---------------------------------------------

  add("mirror.involution", 8, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const auto w = normal(s);
    if (!w) return skip();
    const double k = max_abs(*w);
    const double scale = sc(g) * k * k * k * k / std::abs(dot(*w, *w));
    return verdict(near(mirror(mirror(g, *w, tol), *w, tol), g, tol, scale),
                   {g, Paravector(Complex{}, *w)});
  });
  add("mirror.scalar_sign_flip", 8, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const auto w = normal(s);
    if (!w) return skip();
    const double k = max_abs(*w);
    return verdict(near(mirror(g, *w, tol).scalar(), -g.scalar(), tol,
                        sc(g) * k * k / std::abs(dot(*w, *w))),
                   {g, Paravector(Complex{}, *w)});
  });
  add("mirror.real_normal_closed_form", 8, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const CVector3 n = as_cvector(s.unit_vector());
    const CVector3& v = g.vector();
    const Paravector expected(-g.scalar(), -(n * dot(v, n)) + cross(cross(n, v), n));
    return verdict(near(mirror(g, kI * n, tol), expected, tol, sc(g)), {g, Paravector(Complex{}, n)});
  });
  add("mirror.generalized_closed_form", 8, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const auto w = normal(s);
    if (!w) return skip();
    const Complex ww = dot(*w, *w);
    const CVector3& b = g.vector();
    const Paravector expected(-g.scalar(), (-(*w * dot(b, *w)) + cross(cross(*w, b), *w)) / ww);
    const double k = max_abs(*w);
    return verdict(near(mirror(g, *w, tol), expected, tol, sc(g) * k * k / std::abs(ww)),
                   {g, Paravector(Complex{}, *w)});
  });
  add("mirror.composition_is_rotation", 8, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const auto w1 = normal(s);
    const auto w2 = normal(s);
    if (!w1 || !w2) return skip();
    const RotationAxis axis = compose_mirrors(*w1, *w2, tol);
    const double k1 = max_abs(*w1), k2 = max_abs(*w2);
    const double scale = sc(g) * k1 * k1 * k2 * k2 / std::abs(dot(*w1, *w1) * dot(*w2, *w2)) *
                         std::max(1.0, sc(axis.value()) * sc(axis.value()));
    return verdict(near(rotate(g, axis, Orientation::Left), mirror(mirror(g, *w1, tol), *w2, tol),
                        tol, scale) &&
                       is_orthogonal_transform(axis.value(), tol),
                   {g, Paravector(Complex{}, *w1), Paravector(Complex{}, *w2)});
  });
  add("axial.involution", 8, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const auto w = normal(s);
    if (!w) return skip();
    const double k = max_abs(*w);
    const double scale = sc(g) * k * k * k * k / std::abs(dot(*w, *w));
    return verdict(near(axial_symmetry(axial_symmetry(g, *w, tol), *w, tol), g, tol, scale),
                   {g, Paravector(Complex{}, *w)});
  });
  add("axial.preserves_scalar", 8, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const auto w = normal(s);
    if (!w) return skip();
    const double k = max_abs(*w);
    return verdict(near(axial_symmetry(g, *w, tol).scalar(), g.scalar(), tol,
                        sc(g) * k * k / std::abs(dot(*w, *w))),
                   {g, Paravector(Complex{}, *w)});
  });
  add("axial.closed_form", 8, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const auto w = normal(s);
    if (!w) return skip();
    const Complex ww = dot(*w, *w);
    const CVector3& b = g.vector();
    const Paravector expected(g.scalar(), (*w * dot(b, *w) - cross(cross(*w, b), *w)) / ww);
    const double k = max_abs(*w);
    return verdict(near(axial_symmetry(g, *w, tol), expected, tol, sc(g) * k * k / std::abs(ww)),
                   {g, Paravector(Complex{}, *w)});
  });
  add("axial.straight_angle_rotation", 8, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const Vec3 w = s.real_vector();
    const double len = norm(w);
    if (len < 0.2) return skip();
    SpatialRotation half_turn;
    half_turn.n = {w[0] / len, w[1] / len, w[2] / len};
    half_turn.phi = std::numbers::pi / 2.0;
    return verdict(near(axial_symmetry(g, as_cvector(w), tol),
                        rotate(g, spatial_axis(half_turn, tol), Orientation::Left), tol, sc(g)),
                   {g, real_embedding(w)});
  });
  add("axial.fixes_parallel", 8, [](Sampler& s, const Tolerance& tol) {
    const auto w = normal(s);
    if (!w) return skip();
    const Paravector g(s.complex(), s.complex() * *w);
    const double k = max_abs(*w);
    return verdict(near(axial_symmetry(g, *w, tol), g, tol, sc(g) * k * k / std::abs(dot(*w, *w))),
                   {g, Paravector(Complex{}, *w)});
  });

  // --- matrix representations ------------------------------------------------

  add("matrix4.multiplicative", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    return verdict(near(to_matrix4(a * b), to_matrix4(a) * to_matrix4(b), tol, sc(a) * sc(b)), {a, b});
  });
  add("matrix4.additive", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    return verdict(near(to_matrix4(a + b), to_matrix4(a) + to_matrix4(b), tol), {a, b});
  });
  add("matrix4.det_is_det_squared", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const Complex d = det(g);
    const double k = sc(g);
    return verdict(near(determinant(to_matrix4(g)), d * d, tol, k * k * k * k), {g});
  });
  add("matrix4.conjugate_is_hermitian", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    return verdict(near(to_matrix4(conj(g)), conjugate_transpose(to_matrix4(g)), tol), {g});
  });
  add("matrix4.inverse_is_matrix_inverse", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    if (!non_singular(g, tol)) return skip();
    const auto m = inverse(to_matrix4(g));
    return verdict(m.has_value() && near(to_matrix4(inverse(g, tol)), *m, tol), {g});
  });
  add("matrix4.reverse_pattern", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    const Complex a = g.scalar(), x = g.vector().x(), y = g.vector().y(), z = g.vector().z();
    Matrix4 expected;
    expected.m = {{{a, -x, -y, -z},
                   {-x, a, kI * z, -kI * y},
                   {-y, -kI * z, a, kI * x},
                   {-z, kI * y, -kI * x, a}}};
    return verdict(near(to_matrix4(rev(g)), expected, tol), {g});
  });
  add("matrix4.singular_correspondence", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.chance(0.5) ? s.singular() : s.general();
    const double k = sc(g);
    const double matrix_threshold = tol.abs + tol.rel * k * k * k * k;
    const double d4 = std::abs(determinant(to_matrix4(g)));
    if (classify(g, tol).is_singular) return verdict(d4 <= matrix_threshold, {g});
    // det4 = det^2 only resolves determinants well above the matrix threshold
    if (std::norm(det(g)) <= 10.0 * matrix_threshold) return skip();
    return verdict(d4 > matrix_threshold, {g});
  });
  add("matrix4.roundtrip", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    return verdict(from_matrix4(to_matrix4(g), tol) == g, {g});
  });
  add("pauli.multiplicative", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    return verdict(near(to_pauli(a * b), to_pauli(a) * to_pauli(b), tol, sc(a) * sc(b)), {a, b});
  });
  add("pauli.additive", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general();
    return verdict(near(to_pauli(a + b), to_pauli(a) + to_pauli(b), tol), {a, b});
  });
  add("pauli.det_is_det", 9, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general();
    return verdict(near(determinant(to_pauli(g)), det(g), tol, sc(g) * sc(g)), {g});
  });

  // --- orthogonal transformations --------------------------------------------

  add("orthogonal.preserves_integrated_product", 10, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general(), l = s.orthogonal();
    const double scale = sc(a) * sc(b) * sc(l) * sc(l);
    const bool right = near(integrated(a * l, b * l, Orientation::Right).value,
                            integrated(a, b, Orientation::Right).value, tol, scale);
    const bool left = near(integrated(l * a, l * b, Orientation::Left).value,
                           integrated(a, b, Orientation::Left).value, tol, scale);
    return verdict(right && left, {a, b, l});
  });
  add("orthogonal.preserves_scalar_product", 10, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general(), l = s.orthogonal();
    const Complex sp = scalar_product(a, b);
    const double scale = sc(a) * sc(b) * sc(l) * sc(l);
    return verdict(near(scalar_product(a * l, b * l), sp, tol, scale) &&
                       near(scalar_product(l * a, l * b), sp, tol, scale),
                   {a, b, l});
  });
  add("orthogonal.isometric", 10, [](Sampler& s, const Tolerance& tol) {
    const Paravector g = s.general(), l = s.orthogonal();
    const double scale = sc(g) * sc(g) * sc(l) * sc(l);
    return verdict(near(det(l * g), det(g), tol, scale) && near(det(g * l), det(g), tol, scale),
                   {g, l});
  });
  add("orthogonal.transform_check", 10, [](Sampler& s, const Tolerance& tol) {
    const Paravector p = s.proper(), l = s.orthogonal();
    return verdict(is_orthogonal_transform(normalize(p, tol), tol) &&
                       is_orthogonal_transform(l, tol) &&
                       !is_orthogonal_transform(Complex(2.0, 0.0) * l, tol),
                   {p, l});
  });
  add("transform.vigor_parallelism", 10, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general();
    const Paravector b = s.nonzero_complex() * a;
    const Paravector l = s.orthogonal();
    bool ok = true;
    for (const auto& [x, y] : {std::pair{l * a, l * b}, std::pair{a * l, b * l}}) {
      const Paravector vx = vigor(x), vy = vigor(y);
      if (!non_singular(vx, tol) || !non_singular(vy, tol)) return skip();
      ok = ok && is_parallel(vx, vy, tol);
    }
    return verdict(ok, {a, b, l});
  });
  add("transform.right_action_preserves_product_scalars", 10, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general(), l = s.orthogonal();
    const Paravector al = a * l, bl = b * l;
    const Complex before = scalar_product(conj(a) * a, conj(b) * b);
    const Complex after = scalar_product(conj(al) * al, conj(bl) * bl);
    const double k = sc(a) * sc(b) * sc(l) * sc(l);
    return verdict(near(after, before, tol, k * k), {a, b, l});
  });
  add("transform.left_action_preserves_vigor_scalars", 10, [](Sampler& s, const Tolerance& tol) {
    const Paravector a = s.general(), b = s.general(), l = s.orthogonal();
    const Complex before = scalar_product(vigor(a), vigor(b));
    const Complex after = scalar_product(vigor(l * a), vigor(l * b));
    const double k = sc(a) * sc(b) * sc(l) * sc(l);
    return verdict(near(after, before, tol, k * k), {a, b, l});
  });
  add("sphere.invariance", 10, [](Sampler& s, const Tolerance& tol) {
    const Vec3 x = s.real_vector();
    const Paravector sphere(norm(x), as_cvector(x));
    const Paravector l = s.orthogonal();
    const RotationAxis axis = RotationAxis::from_orthogonal(l, tol);
    bool ok = true;
    for (const Paravector& image : {l * sphere, sphere * l, rotate(sphere, axis, Orientation::Left)}) {
      ok = ok && classify(image, tol).is_singular;
    }
    return verdict(ok, {sphere, l});
  });

  return out;
}

}  // namespace

const std::vector<Property>& catalogue() {
  static const std::vector<Property> properties = build();
  return properties;
}

}  // namespace pv::fuzz
