#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace binsketch {

// Runs fn(begin, end) over contiguous slices of [0, count). Slices are a pure
// function of (count, threads); callers that write disjoint outputs per index
// therefore get scheduling-independent results. The first exception thrown by a
// worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1U, threads);
  if (threads == 1 || count < 2) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  const std::size_t step = (count + workers - 1) / workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * step;
      const std::size_t end = std::min(count, begin + step);
      if (begin >= end) {
        break;
      }
      pool.emplace_back([&, begin, end] {
        try {
          fn(begin, end);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

} // namespace binsketch
