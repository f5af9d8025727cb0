#ifndef KPAS_PARALLEL_HPP
#define KPAS_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kpas {

// Execution route for the data-parallel kernels. Every kernel produces
// bit-identical output on both routes; the serial route is the reference the
// tests compare against.
enum class Exec { serial, parallel };

// Runs fn(i) for i in [0, n). Under Exec::parallel each index is handled by
// exactly one thread, so fn must only touch state owned by index i.
template <typename Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) {
    fn(i);
  }
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace kpas

#endif  // KPAS_PARALLEL_HPP
