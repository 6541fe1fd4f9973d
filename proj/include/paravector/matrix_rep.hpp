#pragma once

// Complex square matrices and the matrix representations of paravectors.
// SquareMatrix carries its own product, LU determinant and inverse so it can
// serve as an oracle for the paravector arithmetic: nothing here calls the
// paravector product.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "paravector/core.hpp"

namespace pv {

template <std::size_t N>
struct SquareMatrix {
  std::array<std::array<Complex, N>, N> m{};

  static SquareMatrix identity() {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) out.m[i][i] = 1.0;
    return out;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out.m[i][j] = a.m[i][j] + b.m[i][j];
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Complex acc{};
        for (std::size_t k = 0; k < N; ++k) acc += a.m[i][k] * b.m[k][j];
        out.m[i][j] = acc;
      }
    return out;
  }

  bool operator==(const SquareMatrix&) const = default;
};

using Matrix4 = SquareMatrix<4>;
using Matrix2 = SquareMatrix<2>;

template <std::size_t N>
SquareMatrix<N> conjugate_transpose(const SquareMatrix<N>& a) {
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out.m[i][j] = std::conj(a.m[j][i]);
  return out;
}

template <std::size_t N>
double max_abs(const SquareMatrix<N>& a) {
  double out = 0.0;
  for (const auto& row : a.m)
    for (const Complex& z : row) out = std::max({out, std::abs(z.real()), std::abs(z.imag())});
  return out;
}

/// Entry-wise comparison scaled by the larger of the two matrices.
template <std::size_t N>
bool approx_eq(const SquareMatrix<N>& a, const SquareMatrix<N>& b, const Tolerance& tol = {}) {
  const double scale = std::max(max_abs(a), max_abs(b));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const Complex d = a.m[i][j] - b.m[i][j];
      if (!tol.accepts(std::max(std::abs(d.real()), std::abs(d.imag())), scale)) return false;
    }
  return true;
}

/// LU decomposition with partial pivoting.
template <std::size_t N>
Complex determinant(SquareMatrix<N> a) {
  Complex d = 1.0;
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(a.m[r][col]) > std::abs(a.m[pivot][col])) pivot = r;
    if (a.m[pivot][col] == Complex{}) return Complex{};
    if (pivot != col) {
      std::swap(a.m[pivot], a.m[col]);
      d = -d;
    }
    d *= a.m[col][col];
    for (std::size_t r = col + 1; r < N; ++r) {
      const Complex f = a.m[r][col] / a.m[col][col];
      for (std::size_t c = col; c < N; ++c) a.m[r][c] -= f * a.m[col][c];
    }
  }
  return d;
}

/// Gauss-Jordan elimination with partial pivoting; nullopt for an exactly singular matrix.
template <std::size_t N>
std::optional<SquareMatrix<N>> inverse(SquareMatrix<N> a) {
  SquareMatrix<N> inv = SquareMatrix<N>::identity();
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(a.m[r][col]) > std::abs(a.m[pivot][col])) pivot = r;
    if (a.m[pivot][col] == Complex{}) return std::nullopt;
    std::swap(a.m[pivot], a.m[col]);
    std::swap(inv.m[pivot], inv.m[col]);
    const Complex p = a.m[col][col];
    for (std::size_t c = 0; c < N; ++c) {
      a.m[col][c] /= p;
      inv.m[col][c] /= p;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col) continue;
      const Complex f = a.m[r][col];
      for (std::size_t c = 0; c < N; ++c) {
        a.m[r][c] -= f * a.m[col][c];
        inv.m[r][c] -= f * inv.m[col][c];
      }
    }
  }
  return inv;
}

/// Left-multiplication matrix of G acting on the column (a, Bx, By, Bz):
///   [ a   Bx    By    Bz  ]
///   [ Bx  a    -iBz   iBy ]
///   [ By  iBz   a    -iBx ]
///   [ Bz -iBy   iBx   a   ]
Matrix4 to_matrix4(const Paravector& g);

/// Reads G from the first row and checks all 16 entries against the pattern.
/// Throws NotAParavectorMatrix naming the first offending entry.
Paravector from_matrix4(const Matrix4& m, const Tolerance& tol = {});

/// a s0 + Bx sx + By sy + Bz sz in the Pauli basis.
Matrix2 to_pauli(const Paravector& g);

/// Text grid, one row per line, entries as re+imi with shortest round-trip decimals.
template <std::size_t N>
std::string format_matrix(const SquareMatrix<N>& m);

}  // namespace pv
