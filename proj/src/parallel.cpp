#include "ngd/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ngd {

void apply_thread_cap() {
#ifdef _OPENMP
    const char* env = std::getenv("NGD_THREADS");
    if (!env) return;
    try {
        const int n = std::stoi(env);
        if (n > 0) omp_set_num_threads(n);
    } catch (...) {
        // unparseable value: leave the OpenMP default alone
    }
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace ngd
