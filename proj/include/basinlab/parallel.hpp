#ifndef BASINLAB_PARALLEL_HPP
#define BASINLAB_PARALLEL_HPP

#ifdef _OPENMP
#include <omp.h>
#endif

namespace basinlab {

/// Worker count for OpenMP regions: omp_get_max_threads(), capped by the
/// BASINLAB_THREADS environment variable when it holds a positive integer.
int worker_count();

}  // namespace basinlab

#endif  // BASINLAB_PARALLEL_HPP
