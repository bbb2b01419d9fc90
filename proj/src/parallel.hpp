#pragma once

#include <exception>
#include <mutex>

#include <omp.h>

namespace kohn::detail {

// Runs body(i) for 0 <= i < count across OpenMP threads and rethrows the
// first exception on the calling thread. workers <= 0 uses the OpenMP default.
template <class F>
void parallel_for(long count, F&& body, int workers = 0) {
  std::exception_ptr error;
  std::mutex error_mutex;
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace kohn::detail
