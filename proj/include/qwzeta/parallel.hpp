#ifndef QWZETA_PARALLEL_HPP
#define QWZETA_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qwzeta {

/// Worker count: QWZETA_THREADS if set and positive, else hardware concurrency.
inline int default_thread_count() {
  if (const char* env = std::getenv("QWZETA_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, count) over contiguous blocks. Results must be
/// written to per-index slots; callers reduce in index order afterwards. The
/// first exception thrown by any worker is rethrown.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (threads <= 0) threads = default_thread_count();
  threads = std::min(threads, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const int block = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int begin = t * block;
    const int end = std::min(count, begin + block);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (int i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace qwzeta

#endif  // QWZETA_PARALLEL_HPP
