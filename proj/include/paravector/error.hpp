#pragma once

#include <stdexcept>
#include <string>

namespace pv {

enum class ErrorCode {
  Validation,            // non-finite or otherwise malformed value
  SingularParavector,
  ImproperParavector,
  NotOrthogonal,         // det != 1 where an orthogonal paravector is required
  OrientationMismatch,
  BadUnitVector,
  IsotropicNormal,
  DegenerateComposition,
  NotAParavectorMatrix,
  Parse,
  Arity,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pv
