#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sklylab {

enum class Errc {
  DivisionByZero,
  MixedFields,
  NonResidue,
  InvalidField,
  ParseError,
  UnknownVariable,
  ShapeMismatch,
  NotZeroDimensional,
  DegreeCapExceeded,
  Unsupported,
  ConstraintViolated,
  CapExceeded,
  Indeterminacy,
  NoPointFound,
  DisagreementAcrossPoints,
  DegenerateParams,
  ClosureExplosion,
  NotInGSpan,
  DegenerateAForm,
  CommonFactorH,
  DegreeMismatch,
  BadPIDegree,
  RangeError,
  InvalidInstance,
};

std::string_view to_string(Errc code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sklylab
