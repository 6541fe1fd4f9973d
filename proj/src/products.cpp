#include "paravector/products.hpp"

namespace pv {

const char* to_string(Orientation o) noexcept {
  return o == Orientation::Right ? "right" : "left";
}

IntegratedProduct integrated(const Paravector& g1, const Paravector& g2, Orientation o) {
  if (o == Orientation::Right) return {g1 * rev(g2), o};
  return {rev(g1) * g2, o};
}

Complex scalar_product(const Paravector& g1, const Paravector& g2) {
  return g1.scalar() * g2.scalar() - dot(g1.vector(), g2.vector());
}

CVector3 vector_product(const Paravector& g1, const Paravector& g2, Orientation o) {
  return integrated(g1, g2, o).value.vector();
}

}  // namespace pv
