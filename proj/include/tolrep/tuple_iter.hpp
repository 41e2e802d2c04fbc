#pragma once

#include <cstddef>
#include <vector>

namespace tolrep {

/// Odometer over all k-tuples with entries in {0..m-1}, last position fastest
/// (lexicographic order). For k = 0 the single empty tuple is visited.
template <typename Fn>
void for_each_tuple(std::size_t m, int k, Fn&& fn) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  if (k == 0) {
    fn(idx);
    return;
  }
  if (m == 0) return;
  for (;;) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == m) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

}  // namespace tolrep
