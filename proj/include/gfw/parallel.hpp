#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace gfw {

struct ExecPolicy {
  bool parallel = false;
  int threads = 0;  // 0: OpenMP default

  static ExecPolicy serial() { return {}; }
  static ExecPolicy openmp(int threads = 0) { return {true, threads}; }
};

/// Runs f(i) for i in [0, n). With a parallel policy the iterations are
/// spread over OpenMP threads; the first exception thrown by any iteration is
/// rethrown after the loop.
template <class F>
void for_each_index(std::size_t n, const ExecPolicy& policy, F&& f) {
  if (!policy.parallel || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
  const int threads = policy.threads > 0 ? policy.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace gfw
