#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chr::par {

inline bool enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Work below this many tasks is not worth forking for.
inline constexpr std::size_t kForkThreshold = 64;

/// Runs body(i) for i in [0, n) and merges the per-thread accumulators with
/// merge(into, from). Accumulator must be default-constructible. The merge
/// is a commutative exact sum, so the result does not depend on scheduling.
template <class Acc, class Body, class Merge>
Acc indexed_reduce(std::size_t n, Body&& body, Merge&& merge) {
  Acc total{};
#ifdef _OPENMP
  if (n >= kForkThreshold && omp_get_max_threads() > 1) {
#pragma omp parallel
    {
      Acc local{};
#pragma omp for schedule(dynamic, 16) nowait
      for (long long i = 0; i < static_cast<long long>(n); ++i)
        body(static_cast<std::size_t>(i), local);
#pragma omp critical(chr_indexed_reduce)
      merge(total, std::move(local));
    }
    return total;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i, total);
  return total;
}

} // namespace chr::par
