#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace relm {

/// Runs fn(i) for i in [0, count) across up to `workers` threads (0 = one per
/// hardware core). Indices are partitioned into contiguous chunks, so results
/// written by index are identical to a serial run regardless of worker count.
template <typename Fn>
void parallel_for(std::size_t workers, std::size_t count, Fn&& fn) {
  if (workers == 0) workers = std::thread::hardware_concurrency();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (workers > count) workers = count;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace relm
