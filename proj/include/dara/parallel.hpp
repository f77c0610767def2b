#ifndef DARA_PARALLEL_HPP
#define DARA_PARALLEL_HPP

// Thin OpenMP shims so kernels also build without -fopenmp.
#if defined(_OPENMP)
#include <omp.h>
#define DARA_OMP_MAX_THREADS omp_get_max_threads()
#define DARA_OMP_NUM_THREADS omp_get_num_threads()
#define DARA_OMP_THREAD_ID omp_get_thread_num()
#else
#define DARA_OMP_MAX_THREADS (1)
#define DARA_OMP_NUM_THREADS (1)
#define DARA_OMP_THREAD_ID (0)
#endif

#endif  // DARA_PARALLEL_HPP
