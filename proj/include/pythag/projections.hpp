#pragma once

#include <array>
#include <utility>
#include <vector>

#include "pythag/linalg.hpp"

namespace pythag::proj {

using linalg::Complex;
using linalg::ComplexFrame;
using linalg::MultiIndex;
using linalg::RealFrame;

// Per-coordinate-subspace projected volumes plus the identity they satisfy.
// Real frames: quadratic (total^2 = sum of squares); complex: linear
// (total = plain sum). per_index is lexicographic in the multi-index.
struct ProjectionReport {
    double total = 0.0;
    std::vector<std::pair<MultiIndex, double>> per_index;
    double identity_lhs = 0.0;
    double identity_rhs = 0.0;
    double residual = 0.0;  // |lhs - rhs| / max(lhs, 1)
};

// total = gram_volume, per_index[I] = |det M_I|, identity total^2 = sum V_I^2.
ProjectionReport real_projection_volumes(const RealFrame& f);

// p-volume of a frame of p vectors vs its m-dimensional coordinate-subspace
// projections: lhs = V^2, rhs = C(n-p, n-m)^{-1} * sum V_I^2.
linalg::IdentityCheck corollary_residual(const RealFrame& f, int m);

// Square on a complex line Cv: total = ||v||^2, per_index[k] = |v_k|^2,
// identity total = sum (linear). v = 0 -> std::domain_error.
ProjectionReport complex_line_areas(const std::vector<Complex>& v);

// total = det(M^dagger M), per_index[I] = |det M_I|^2, identity linear.
ProjectionReport complex_subspace_volumes(const ComplexFrame& f);

// Vertices in plane coordinates; the plane is spanned by two frame vectors.
using Polygon = std::vector<std::array<double, 2>>;

// Area of the polygon's projection into the coordinate plane C_I: vertices
// are mapped through the frame, coordinates outside I dropped, shoelace
// applied in the (orthonormal) kept axes.
double region_projection_area(const RealFrame& plane, const Polygon& region, const MultiIndex& I);

}  // namespace pythag::proj
