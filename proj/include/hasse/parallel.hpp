#pragma once

// Execution policy for the data-parallel kernels. Every kernel has a plain
// serial loop kept as the reference; the parallel path uses OpenMP when the
// build enables it and falls back to the serial loop otherwise.

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hasse {

enum class Exec { Serial, Parallel };

inline void set_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

/// Runs body(i) for i in [0, n). Iterations must be independent; callers
/// write results into pre-sized slots so output order never depends on
/// scheduling.
template <typename Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  // Exceptions may not cross the parallel region; keep the first and rethrow.
  std::exception_ptr failure;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hasse_for_each_index)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace hasse
