#pragma once

#include <cstdint>
#include <vector>

#include "factorlab/vertex_set.hpp"

namespace factorlab::detail {

/// All k-subsets of {0..n-1} in increasing mask order.
inline std::vector<VertexSet> subsets_of_size(int n, int k) {
  std::vector<VertexSet> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  if (k > n) return out;
  std::uint64_t mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  while (true) {
    out.emplace_back(mask);
    // Gosper's hack: next mask with the same popcount.
    std::uint64_t low = mask & (~mask + 1);
    std::uint64_t ripple = mask + low;
    if (ripple == 0) break;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
    if (limit != 0 && mask >= limit) break;
  }
  return out;
}

}  // namespace factorlab::detail
