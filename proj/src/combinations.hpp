#pragma once

#include <cstddef>
#include <vector>

namespace hyperconn::detail {

/// Calls `visit` with every k-subset of `pool` in lexicographic order of
/// positions. Stops and returns true as soon as `visit` returns true.
template <typename T, typename Visit>
bool for_each_combination(const std::vector<T>& pool, std::size_t k, Visit&& visit) {
  const std::size_t n = pool.size();
  if (k > n) return false;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<T> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[pos[i]];
    if (visit(chosen)) return true;
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace hyperconn::detail
