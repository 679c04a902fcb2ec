#pragma once

#include <algorithm>
#include <cmath>

namespace otpart {

/// Absolute tolerance on floating-point cost comparisons (euclidean and
/// power costs). Exact-capable costs never use it.
inline constexpr double kCostAbsTol = 1e-9;

/// Relative tolerance when asserting equality of two optima computed by
/// different routes in floating point.
inline constexpr double kOptRelTol = 1e-7;

inline bool costs_equal(double a, double b) {
  const double diff = std::abs(a - b);
  return diff <= kCostAbsTol ||
         diff <= kOptRelTol * std::max(std::abs(a), std::abs(b));
}

}  // namespace otpart
