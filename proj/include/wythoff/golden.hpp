#pragma once

// Exact sign tests for expressions of the form u - v*sqrt(5) with integer
// u, v. Inequalities involving phi = (1 + sqrt 5) / 2 are rearranged into
// this shape so that no decision depends on rounding.

#include <cstdint>
#include <stdexcept>

namespace wythoff::golden {

using i128 = __int128;

/// Sign of u - v*sqrt(5): -1, 0 or +1. Zero only when u = v = 0.
inline int sign_minus_sqrt5(std::int64_t u, std::int64_t v) {
  const i128 uu = static_cast<i128>(u) * u;
  const i128 vv5 = static_cast<i128>(v) * v * 5;
  if (v >= 0) {
    if (u <= 0) return (u == 0 && v == 0) ? 0 : -1;
    return uu > vv5 ? 1 : -1;  // u^2 == 5 v^2 is impossible for v != 0
  }
  // v < 0, so v*sqrt(5) < 0
  if (u >= 0) return 1;
  return uu < vv5 ? 1 : -1;
}

/// u <= v*sqrt(5)
inline bool le(std::int64_t u, std::int64_t v) { return sign_minus_sqrt5(u, v) <= 0; }
/// u < v*sqrt(5)
inline bool lt(std::int64_t u, std::int64_t v) { return sign_minus_sqrt5(u, v) < 0; }
/// u >= v*sqrt(5)
inline bool ge(std::int64_t u, std::int64_t v) { return sign_minus_sqrt5(u, v) >= 0; }
/// u > v*sqrt(5)
inline bool gt(std::int64_t u, std::int64_t v) { return sign_minus_sqrt5(u, v) > 0; }

/// p <= q * phi, i.e. 2p - q <= q*sqrt(5).
inline bool le_phi_multiple(std::int64_t p, std::int64_t q) { return le(2 * p - q, q); }
/// p >= q * phi
inline bool ge_phi_multiple(std::int64_t p, std::int64_t q) { return ge(2 * p - q, q); }

}  // namespace wythoff::golden
