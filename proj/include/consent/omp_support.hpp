#ifndef CONSENT_OMP_SUPPORT_HPP
#define CONSENT_OMP_SUPPORT_HPP

// OpenMP shim: serial builds see the same API with a single thread.

#ifdef _OPENMP
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
#endif

namespace consent {

// Selects between the OpenMP kernel and its serial reference twin.
// Every parallel kernel in this library has a serial implementation with
// identical output; tests compare the two and benchmarks time them.
enum class Exec { Serial, Parallel };

inline int max_threads(Exec exec) {
  return exec == Exec::Parallel ? omp_get_max_threads() : 1;
}

} // namespace consent

#endif
