#pragma once

#include <cstdint>

namespace acm {

/// Every count, entry and genus is a 64-bit signed integer. Arithmetic that
/// could leave the representable range goes through the checked helpers
/// below, which throw std::overflow_error instead of wrapping.
using Int = std::int64_t;

Int checkedAdd(Int a, Int b);
Int checkedMul(Int a, Int b);

/// C(n, m) with C(n, m) = 0 for n < m and C(n, 0) = 1.
/// Throws std::invalid_argument for negative arguments and
/// std::overflow_error when the result does not fit.
Int binomial(Int n, Int m);

/// C(n, 2) for n >= 0; the common special case.
constexpr Int choose2(Int n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace acm
