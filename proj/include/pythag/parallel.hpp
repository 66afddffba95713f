#pragma once

#include <cstddef>

namespace pythag::par {

enum class Mode { serial, openmp };

// openmp when compiled with it, serial otherwise.
Mode default_mode();

// Runs fn(0..count-1). Work items must write to disjoint slots; reductions
// happen afterwards in index order, so serial and openmp modes produce
// identical bytes regardless of thread count.
template <class F>
void for_each_index(std::size_t count, Mode mode, F&& fn) {
#ifdef _OPENMP
    if (mode == Mode::openmp) {
        const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < n; ++i) {
            fn(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < count; ++i) {
        fn(i);
    }
}

}  // namespace pythag::par
