#include "otpart/genfun.hpp"

#include <stdexcept>
#include <vector>

namespace otpart {

namespace {
// Largest n whose coefficient still fits in long long.
constexpr long long kMax1d = 400;
constexpr long long kMax2d = 140;
}  // namespace

long long count_by_generating_function(long long n, int m) {
  if (m != 1 && m != 2)
    throw std::domain_error(
        "no generating function available for dimension " + std::to_string(m));
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if ((m == 1 && n > kMax1d) || (m == 2 && n > kMax2d))
    throw std::domain_error("coefficient would overflow the exact 64-bit count");

  std::vector<long long> coef(static_cast<std::size_t>(n) + 1, 0);
  coef[0] = 1;  // empty product: p(0) = 1
  for (long long k = 1; k <= n; ++k) {
    const int reps = m == 1 ? 1 : static_cast<int>(k);
    for (int t = 0; t < reps; ++t) {
      // Multiply by 1/(1 - x^k).
      for (long long v = k; v <= n; ++v)
        coef[static_cast<std::size_t>(v)] += coef[static_cast<std::size_t>(v - k)];
    }
  }
  return coef[static_cast<std::size_t>(n)];
}

}  // namespace otpart
