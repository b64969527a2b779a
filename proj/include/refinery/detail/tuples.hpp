#pragma once

#include <span>
#include <vector>

namespace refinery::detail {

// Visits every argument tuple over {0..n-1}^arity in row-major order
// (first coordinate most significant).  Arity 0 visits the empty tuple once.
template <typename Fn>
void for_each_tuple(int n, int arity, Fn&& fn) {
  if (n == 0 && arity > 0) return;
  std::vector<int> t(static_cast<std::size_t>(arity), 0);
  for (;;) {
    fn(std::span<const int>(t));
    int i = arity - 1;
    while (i >= 0 && t[i] == n - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
}

}  // namespace refinery::detail
