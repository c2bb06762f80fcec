#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pinwheel {

// Worker cap: PINWHEEL_WORKERS if set (clamped to [1, hardware]), else the
// hardware count. Partitioning is by contiguous index ranges with disjoint
// outputs, so results never depend on the worker count.
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("PINWHEEL_WORKERS")) {
    const long requested = std::strtol(env, nullptr, 10);
    if (requested >= 1) return static_cast<unsigned>(std::min<long>(requested, hw));
    return 1;
  }
  return hw;
}

// Runs fn(begin, end) over a partition of [0, n) across workers.
inline void parallel_ranges(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
  if (workers <= 1 || n < 2) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fn, begin, end);
  }
  for (auto& t : pool) t.join();
}

}  // namespace pinwheel
