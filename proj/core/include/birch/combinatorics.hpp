#pragma once

#include <cstddef>
#include <vector>

namespace birch {

/// Calls `visit(indices)` for every k-subset of {0..m-1} in lexicographic
/// order. Stops early when `visit` returns true; returns whether it did.
template <typename Visit>
bool for_each_combination(std::size_t m, std::size_t k, Visit&& visit) {
  if (k > m) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (visit(static_cast<const std::vector<std::size_t>&>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace birch
