#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uncertts {

// Worker cap: UNCERTTS_THREADS wins, then OpenMP's own default. 1 when built
// without OpenMP.
inline int scan_thread_count() {
#ifdef _OPENMP
    if (const char* env = std::getenv("UNCERTTS_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Evaluates score(i) for every id into a dense result vector. Each slot is
// written exactly once, so the parallel and serial paths produce bitwise
// identical vectors; only the wall clock differs.
template <typename ScoreFn>
std::vector<double> score_all(const std::vector<std::size_t>& ids, ScoreFn&& score,
                              bool parallel = true) {
    std::vector<double> out(ids.size());
#ifdef _OPENMP
    if (parallel && ids.size() > 1) {
        const int threads = scan_thread_count();
#pragma omp parallel for schedule(static) num_threads(threads)
        for (long long k = 0; k < static_cast<long long>(ids.size()); ++k)
            out[static_cast<std::size_t>(k)] = score(ids[static_cast<std::size_t>(k)]);
        return out;
    }
#else
    (void)parallel;
#endif
    for (std::size_t k = 0; k < ids.size(); ++k) out[k] = score(ids[k]);
    return out;
}

}  // namespace uncertts
