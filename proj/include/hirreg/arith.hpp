#pragma once

#include <cstdint>

#include "hirreg/error.hpp"

namespace hirreg {

/// Ceiling of p / q rounded toward +infinity, exact for negative p.
/// Built-in division truncates toward zero, which is wrong for p < 0.
inline std::int64_t ceil_div(std::int64_t p, std::int64_t q) {
  if (q <= 0) {
    throw Error(ErrorCode::InvalidParameter, "ceil_div requires a positive divisor");
  }
  return p / q + (p % q > 0 ? 1 : 0);
}

}  // namespace hirreg
