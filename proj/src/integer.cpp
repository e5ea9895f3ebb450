#include "acm/integer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace acm {

Int checkedAdd(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checkedMul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int binomial(Int n, Int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("binomial: negative argument");
  if (m > n) return 0;
  m = std::min(m, n - m);
  Int r = 1;
  // r = C(n - m + i, i) after step i; divide out the gcd first so the
  // intermediate product only overflows when the partial result does.
  for (Int i = 1; i <= m; ++i) {
    const Int g = std::gcd(r, i);
    r = checkedMul(r / g, (n - m + i) / (i / g));
  }
  return r;
}

}  // namespace acm
