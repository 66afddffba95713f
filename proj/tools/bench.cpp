// Timing comparison of the serial reference kernels against the OpenMP
// paths. Both produce identical bytes; this only measures speed.

#include <chrono>
#include <cstdint>
#include <cstdio>

#include "pythag/curved.hpp"
#include "pythag/linalg.hpp"
#include "pythag/oracle.hpp"
#include "pythag/parallel.hpp"
#include "pythag/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double openmp_ms) {
    std::printf("%-28s serial %9.2f ms   openmp %9.2f ms   speedup %.2fx\n", name, serial_ms, openmp_ms,
                serial_ms / openmp_ms);
}

}  // namespace

int main() {
    using pythag::par::Mode;

    const pythag::linalg::RealFrame frame(4, {{1.0, 0.5, -0.25, 1.5},
                                              {0.0, 1.0, 0.75, -0.5},
                                              {0.5, -1.0, 1.0, 0.25}});
    constexpr std::uint64_t kMcSamples = 4'000'000;
    report("mc_parallelotope_volume",
           time_ms([&] { pythag::oracle::mc_parallelotope_volume(frame, kMcSamples, 7, Mode::serial); }),
           time_ms([&] { pythag::oracle::mc_parallelotope_volume(frame, kMcSamples, 7, Mode::openmp); }));

    const auto sphere = pythag::curved::Geometry::spherical(1.0);
    constexpr std::uint64_t kSteps = 40'000'000;
    report("quadrature_disk_area",
           time_ms([&] { pythag::oracle::quadrature_disk_area(sphere, 2.0, kSteps, Mode::serial); }),
           time_ms([&] { pythag::oracle::quadrature_disk_area(sphere, 2.0, kSteps, Mode::openmp); }));

    constexpr std::uint64_t kCases = 4000;
    report("verify all suites",
           time_ms([&] { pythag::verify::run_suite("all", 1, 1e-9, kCases, Mode::serial); }),
           time_ms([&] { pythag::verify::run_suite("all", 1, 1e-9, kCases, Mode::openmp); }));

    return 0;
}
