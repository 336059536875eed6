#pragma once

// Worker-count control for the OpenMP kernels.  Every parallel kernel in this
// library produces bit-identical results for any worker count; see the
// *_serial reference implementations and tests/test_parallel_consistency.cpp.

#if defined(_OPENMP)
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
inline void omp_set_num_threads(int) {}
#endif

namespace inflate {

// Reads INFLATE_WORKERS once and applies it; returns the effective count.
int init_workers_from_env();

int worker_count();
void set_worker_count(int n);

}  // namespace inflate
