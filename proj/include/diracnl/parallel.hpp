#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace diracnl {

/// Thread cap: DIRAC_NL_THREADS env var when set, hardware concurrency
/// otherwise.
inline unsigned thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("DIRAC_NL_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1 && static_cast<unsigned>(n) < hw) hw = static_cast<unsigned>(n);
  }
  return hw;
}

/// Index-parallel map over [0, n); fn must be pure per index. Results are
/// written by index, so the outcome is thread-count independent. The first
/// exception thrown by fn is rethrown on the calling thread.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::size_t>(thread_cap(), n));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += nthreads) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

} // namespace diracnl
