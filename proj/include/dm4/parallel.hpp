#pragma once

// Minimal fork-join helper. Results must be aggregated positionally so that
// outputs do not depend on the worker count.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace dm4 {

inline int& thread_limit() {
  static int limit = 0;  // 0 = hardware concurrency
  return limit;
}

inline int effective_threads() {
  int limit = thread_limit();
  if (limit > 0) return limit;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(begin, end) over disjoint chunks of [0, n).
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
  int nt = effective_threads();
  if (nt <= 1 || n < 2048) {
    fn(std::size_t{0}, n);
    return;
  }
  std::size_t chunk = (n + nt - 1) / nt;
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace dm4
