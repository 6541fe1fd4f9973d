#include "paravector/wire.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

namespace pv {

namespace {

// nlohmann reads "-0" as the integer 0; take the values from the text instead.
std::vector<double> scan_numbers(std::string_view text) {
  std::vector<double> out;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    const char ch = *p;
    if (ch == '-' || (ch >= '0' && ch <= '9')) {
      double x = 0.0;
      const auto res = std::from_chars(p, end, x);
      if (res.ec != std::errc()) {
        throw Error(ErrorCode::Validation, "element " + std::to_string(out.size()) + " is not finite");
      }
      out.push_back(x);
      p = res.ptr;
    } else {
      ++p;
    }
  }
  return out;
}

}  // namespace

std::vector<double> parse_real_array(std::string_view text, std::size_t arity) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, "at byte " + std::to_string(e.byte) + ": malformed JSON");
  } catch (const nlohmann::json::out_of_range&) {
    throw Error(ErrorCode::Validation, "number out of range");
  }
  if (!doc.is_array()) throw Error(ErrorCode::Parse, "at byte 0: expected a JSON array");
  if (doc.size() != arity) {
    throw Error(ErrorCode::Arity, "expected " + std::to_string(arity) + " numbers, got " +
                                      std::to_string(doc.size()));
  }
  for (std::size_t k = 0; k < doc.size(); ++k) {
    if (!doc[k].is_number()) {
      throw Error(ErrorCode::Parse, "element " + std::to_string(k) + " is not a number");
    }
  }
  std::vector<double> out = scan_numbers(text);
  if (out.size() != arity) throw Error(ErrorCode::Parse, "unexpected number layout");
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!std::isfinite(out[k])) {
      throw Error(ErrorCode::Validation, "element " + std::to_string(k) + " is not finite");
    }
  }
  return out;
}

Paravector parse_paravector(std::string_view text) {
  const std::vector<double> c = parse_real_array(text, 8);
  return Paravector::from_components(std::span<const double, 8>(c.data(), 8));
}

CVector3 parse_vector3(std::string_view text) {
  const std::vector<double> c = parse_real_array(text, 6);
  return CVector3::from_parts({c[0], c[1], c[2]}, {c[3], c[4], c[5]});
}

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

template <typename Range>
std::string format_array(const Range& values) {
  std::string out = "[";
  bool first = true;
  for (double x : values) {
    if (!first) out += ',';
    out += format_double(x);
    first = false;
  }
  out += ']';
  return out;
}

}  // namespace

std::string format_paravector(const Paravector& g) { return format_array(g.components()); }

std::string format_complex(Complex z) {
  return format_array(std::array<double, 2>{z.real(), z.imag()});
}

std::string format_vector3(const CVector3& v) {
  const Vec3 b = v.real();
  const Vec3 c = v.imag();
  return format_array(std::array<double, 6>{b[0], b[1], b[2], c[0], c[1], c[2]});
}

std::string format_complex_text(Complex z) {
  std::string out = format_double(z.real());
  const double im = z.imag();
  out += (std::signbit(im) ? "-" : "+");
  out += format_double(std::abs(im));
  out += 'i';
  return out;
}

std::string format_classification(const Classification& c, bool json) {
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  if (json) {
    nlohmann::ordered_json doc;
    doc["det"] = {c.det.real(), c.det.imag()};
    doc["proper"] = c.is_proper;
    doc["singular"] = c.is_singular;
    doc["orthogonal"] = c.is_orthogonal;
    doc["special"] = c.is_special;
    doc["unitar"] = c.is_unitar;
    doc["tol"] = {{"abs", c.tol.abs}, {"rel", c.tol.rel}};
    return doc.dump();
  }
  std::string out;
  out += "det         " + format_complex(c.det) + "\n";
  out += std::string("proper      ") + flag(c.is_proper) + "\n";
  out += std::string("singular    ") + flag(c.is_singular) + "\n";
  out += std::string("orthogonal  ") + flag(c.is_orthogonal) + "\n";
  out += std::string("special     ") + flag(c.is_special) + "\n";
  out += std::string("unitar      ") + flag(c.is_unitar) + "\n";
  return out;
}

}  // namespace pv
