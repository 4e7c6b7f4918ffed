#include "unitals/error.hpp"

namespace unitals {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotASubfieldOrder: return "NotASubfieldOrder";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::EvenCharacteristicUnsupported: return "EvenCharacteristicUnsupported";
    case ErrorCode::OddCharacteristic: return "OddCharacteristic";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::SingularConic: return "SingularConic";
    case ErrorCode::PointNotOnConic: return "PointNotOnConic";
    case ErrorCode::AlphaIsSquare: return "AlphaIsSquare";
    case ErrorCode::ZeroTriple: return "ZeroTriple";
    case ErrorCode::RankOne: return "RankOne";
    case ErrorCode::NotASquareOrder: return "NotASquareOrder";
    case ErrorCode::EvenQ: return "EvenQ";
    case ErrorCode::TIsSquare: return "TIsSquare";
    case ErrorCode::NotAUnital: return "NotAUnital";
    case ErrorCode::CoincidentConics: return "CoincidentConics";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace unitals
