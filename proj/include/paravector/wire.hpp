#pragma once

// Text formats. A paravector travels as a flat JSON array of 8 numbers in
// the order (a, d, bx, by, bz, cx, cy, cz); numbers are written as shortest
// round-trip decimals, so parse(format(G)) reproduces G bit for bit.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "paravector/core.hpp"

namespace pv {

/// A JSON array of exactly `arity` finite numbers.
/// Throws Parse (with byte position) or Arity.
std::vector<double> parse_real_array(std::string_view text, std::size_t arity);

Paravector parse_paravector(std::string_view text);
/// Six numbers (bx, by, bz, cx, cy, cz).
CVector3 parse_vector3(std::string_view text);

std::string format_double(double x);
std::string format_paravector(const Paravector& g);
/// "[re,im]"
std::string format_complex(Complex z);
/// "[bx,by,bz,cx,cy,cz]"
std::string format_vector3(const CVector3& v);
/// Human-readable "re+imi" form used in matrix grids.
std::string format_complex_text(Complex z);

struct Classification;
std::string format_classification(const Classification& c, bool json);

}  // namespace pv
