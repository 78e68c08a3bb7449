#pragma once

// OpenMP helpers. Kernels come in pairs: a `_serial` reference used by the
// tests and a parallel version; both must return identical results.

#ifdef _OPENMP
#include <omp.h>
#define FA_PARALLEL_FOR _Pragma("omp parallel for schedule(dynamic)")
#define FA_PARALLEL_REGION _Pragma("omp parallel")
#define FA_PARALLEL_LOOP _Pragma("omp for schedule(dynamic, 64)")
#else
#define FA_PARALLEL_FOR
#define FA_PARALLEL_REGION
#define FA_PARALLEL_LOOP
#endif

namespace fa {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace fa
