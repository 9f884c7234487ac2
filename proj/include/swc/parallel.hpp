#pragma once

#include <cstdlib>
#include <functional>

#ifdef SWC_HAVE_OPENMP
#include <omp.h>
#endif

namespace swc {

/* Process-wide switch between the OpenMP kernels and the serial reference
 * path (kept for testing and benchmarking; results must be identical). */
inline bool& parallel_enabled() {
    static bool enabled = [] {
        const char* env = std::getenv("SWC_SERIAL");
        return !(env && env[0] == '1');
    }();
    return enabled;
}

template <class Fn>
void parallel_for(int n, const Fn& fn) {
#ifdef SWC_HAVE_OPENMP
    if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
#endif
    for (int i = 0; i < n; ++i) fn(i);
}

}  // namespace swc
