#pragma once

// Small modular arithmetic on group orders. Not installed.

#include <cstdint>
#include <numeric>
#include <vector>

#include "liftcheck/error.hpp"

namespace liftcheck::detail {

// Representative of unit mod order in 1..order.
inline std::uint64_t normalize_unit(long long unit, std::uint64_t order) {
  const long long m = static_cast<long long>(order);
  const long long r = ((unit % m) + m) % m;
  return r == 0 ? order : static_cast<std::uint64_t>(r);
}

inline std::uint64_t inverse_unit(std::uint64_t unit, std::uint64_t m) {
  if (m == 1) return 1;
  for (std::uint64_t x = 1; x < m; ++x)
    if ((unit % m) * x % m == 1) return x;
  throw InvariantError("inverse_unit: not a unit");
}

// Units of Z_m as representatives in 1..m.
inline std::vector<std::uint64_t> units_mod(std::uint64_t m) {
  if (m == 1) return {1};
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x < m; ++x)
    if (std::gcd(x, m) == 1) out.push_back(x);
  return out;
}

}  // namespace liftcheck::detail
