#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace fencemonoid::detail {

// Runs fn(begin, end) over `threads` contiguous slices of [0, count). With
// one thread (or little work) everything runs inline on the caller.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (workers == 1 || count < 64) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    std::size_t lo = std::min(count, w * chunk);
    std::size_t hi = std::min(count, lo + chunk);
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  fn(std::size_t{0}, std::min(count, chunk));
}

}  // namespace fencemonoid::detail
