#pragma once

#include <optional>

#include "unitals/error.hpp"

namespace unitals::test {

// The code of the Error thrown by fn, or nullopt when nothing is thrown.
template <class Fn>
std::optional<ErrorCode> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace unitals::test
