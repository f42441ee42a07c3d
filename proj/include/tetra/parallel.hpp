#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tetra {

// Batch helpers for the embarrassingly parallel loops (relation evaluation
// over sample points, certification over catalog entries). Results are
// written by index, so parallel and serial runs produce identical output.
//
// run_parallel_loops() is the runtime switch; the serial path is kept as
// the reference implementation and the tests compare the two.

inline bool& parallel_enabled() {
    static bool enabled = true;
    return enabled;
}

inline int worker_count() {
#ifdef _OPENMP
    return parallel_enabled() ? omp_get_max_threads() : 1;
#else
    return 1;
#endif
}

template <class Fn>
void serial_for(std::size_t n, Fn&& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
    if (parallel_enabled() && n > 1) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    serial_for(n, fn);
}

}  // namespace tetra
