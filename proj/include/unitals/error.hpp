#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unitals {

enum class ErrorCode {
  // gf
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  DivisionByZero,
  NotASubfieldOrder,
  // geom
  UnsupportedDimension,
  CoincidentPoints,
  SingularMatrix,
  // conic
  EvenCharacteristicUnsupported,
  OddCharacteristic,
  NotIrreducible,
  SingularConic,
  PointNotOnConic,
  AlphaIsSquare,
  // veronese
  ZeroTriple,
  RankOne,
  // unital
  NotASquareOrder,
  EvenQ,
  TIsSquare,
  NotAUnital,
  // analysis
  CoincidentConics,
  FieldTooSmall,
  // generic
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unitals
