#pragma once

#include "paravector/core.hpp"

namespace pv {

enum class Orientation { Right, Left };

const char* to_string(Orientation o) noexcept;

/// Right: G1 G2^-   Left: G1^- G2.
/// Both orientations share the scalar part (the scalar product).
struct IntegratedProduct {
  Paravector value;
  Orientation orientation = Orientation::Right;
};

IntegratedProduct integrated(const Paravector& g1, const Paravector& g2, Orientation o);

/// a1 a2 - B1.B2
Complex scalar_product(const Paravector& g1, const Paravector& g2);

/// Vector part of the oriented integrated product.
///   Right: -a1 B2 + a2 B1 - i B1 x B2
///   Left:   a1 B2 - a2 B1 - i B1 x B2
CVector3 vector_product(const Paravector& g1, const Paravector& g2, Orientation o);

}  // namespace pv
