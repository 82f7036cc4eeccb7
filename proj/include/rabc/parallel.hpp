#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace rabc {

//! Run fn(begin, end) over [0, n) split into fixed-size blocks claimed by a
//! worker pool. The block partition does not depend on the thread count, so
//! callers that write results by index get identical output for any number
//! of workers. threads <= 1 runs inline.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t)>& fn,
                         std::size_t block = 4096) {
  if (n == 0) return;
  if (threads <= 1 || n <= block) {
    fn(0, n);
    return;
  }
  const std::size_t nblocks = (n + block - 1) / block;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= nblocks || failed.load(std::memory_order_relaxed)) return;
      const std::size_t lo = b * block;
      const std::size_t hi = std::min(n, lo + block);
      try {
        fn(lo, hi);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  const int nworkers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads), nblocks));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nworkers));
  for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace rabc
