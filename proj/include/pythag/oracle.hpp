#pragma once

#include <cstdint>

#include "pythag/curved.hpp"
#include "pythag/linalg.hpp"
#include "pythag/parallel.hpp"

namespace pythag::oracle {

// Reproducible Monte Carlo estimate: identical (seed, samples) inputs give
// identical bytes in serial and openmp modes.
struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Unbiased hit-or-miss m-volume estimate for the parallelotope spanned by
// the frame, sampled in the bounding box of its span coordinates. Never
// evaluates a determinant; rank-deficient frames report 0 +- 0.
// samples < 1000 -> std::domain_error.
McEstimate mc_parallelotope_volume(const linalg::RealFrame& f, std::uint64_t samples,
                                   std::uint64_t seed, par::Mode mode = par::default_mode());

// Composite-midpoint integral of the geodesic circle circumference from 0
// to r; O(steps^-2) error. steps < 100 -> std::domain_error.
double quadrature_disk_area(const curved::Geometry& g, double r, std::uint64_t steps,
                            par::Mode mode = par::default_mode());

// Right-triangle hypotenuse recovered purely from embedded vertices and
// (Minkowski) dot products — the closed hypotenuse forms never appear.
double embedded_hypotenuse(const curved::Geometry& g, double b, double c);

}  // namespace pythag::oracle
