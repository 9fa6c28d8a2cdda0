#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace tnn {

/// Worker count: TNN_CELLS_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned default_thread_count();

/// Runs task(k) for k in [0, n) on up to `threads` workers. Each index runs
/// exactly once; the first exception thrown by any task is rethrown after all
/// workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task, unsigned threads = 0);

/// out[k] = fn(k), computed with parallel_for. Output order never depends on
/// scheduling.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t n, Fn&& fn, unsigned threads = 0) {
  std::vector<R> out(n);
  parallel_for(n, [&](std::size_t k) { out[k] = fn(k); }, threads);
  return out;
}

}  // namespace tnn
