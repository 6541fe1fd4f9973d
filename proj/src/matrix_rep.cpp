#include "paravector/matrix_rep.hpp"

#include <algorithm>
#include <vector>

#include "paravector/wire.hpp"

namespace pv {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

Matrix4 to_matrix4(const Paravector& g) {
  const Complex a = g.scalar();
  const Complex x = g.vector().x();
  const Complex y = g.vector().y();
  const Complex z = g.vector().z();
  Matrix4 out;
#ifdef PV_MUTANT_MATRIX_TRANSPOSE
  out.m = {{{a, x, y, z},
            {x, a, kI * z, -kI * y},
            {y, -kI * z, a, kI * x},
            {z, kI * y, -kI * x, a}}};
#else
  out.m = {{{a, x, y, z},
            {x, a, -kI * z, kI * y},
            {y, kI * z, a, -kI * x},
            {z, -kI * y, kI * x, a}}};
#endif
  return out;
}

Paravector from_matrix4(const Matrix4& m, const Tolerance& tol) {
  const Paravector g(m(0, 0), CVector3(m(0, 1), m(0, 2), m(0, 3)));
  const Matrix4 expected = to_matrix4(g);
  const double scale = std::max(max_abs(m), max_abs(expected));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const Complex d = m(r, c) - expected(r, c);
      if (!tol.accepts(std::max(std::abs(d.real()), std::abs(d.imag())), scale)) {
        throw Error(ErrorCode::NotAParavectorMatrix,
                    "entry (" + std::to_string(r) + "," + std::to_string(c) +
                        ") violates the paravector matrix pattern");
      }
    }
  return g;
}

Matrix2 to_pauli(const Paravector& g) {
  const Complex a = g.scalar();
  const Complex x = g.vector().x();
  const Complex y = g.vector().y();
  const Complex z = g.vector().z();
  Matrix2 out;
  out.m = {{{a + z, x - kI * y}, {x + kI * y, a - z}}};
  return out;
}

template <std::size_t N>
std::string format_matrix(const SquareMatrix<N>& m) {
  std::array<std::array<std::string, N>, N> cells;
  std::size_t width = 0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      cells[r][c] = format_complex_text(m(r, c));
      width = std::max(width, cells[r][c].size());
    }
  std::string out;
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      if (c > 0) out += "  ";
      out += std::string(width - cells[r][c].size(), ' ');
      out += cells[r][c];
    }
    out += '\n';
  }
  return out;
}

template std::string format_matrix(const SquareMatrix<4>&);
template std::string format_matrix(const SquareMatrix<2>&);

}  // namespace pv
