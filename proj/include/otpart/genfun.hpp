#pragma once

namespace otpart {

/// Coefficient of x^n in prod_{i>=1} 1/(1-x^i) for m = 1, or in
/// prod_{k>=1} 1/(1-x^k)^k for m = 2, by exact truncated integer
/// power-series expansion. p(0) = 1 by the empty-product convention.
/// Serves as the independent counting oracle for the enumerators.
///
/// Throws std::domain_error for m outside {1, 2} (no closed product
/// is available for m >= 3) and for n large enough to overflow the
/// exact 64-bit count.
long long count_by_generating_function(long long n, int m);

}  // namespace otpart
