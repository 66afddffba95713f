#pragma once

#include <vector>

namespace pythag::simplex {

// Right-corner n-simplex: vertex A_0 at the origin, A_k on axis k at
// coordinate a_k > 0. Faces F_k omit vertex A_k; F_0 is the hypotenusal
// face. n is capped at 20 so factorials stay exact in double precision.
class RightSimplex {
public:
    explicit RightSimplex(std::vector<double> legs);

    int n() const { return static_cast<int>(legs_.size()); }
    double leg(int k) const;  // 1-based
    const std::vector<double>& legs() const { return legs_; }

private:
    std::vector<double> legs_;
};

// (n-1)-volume of the leg face F_k, k in 1..n: (prod of the other legs)/(n-1)!
double leg_face_volume(const RightSimplex& s, int k);

// Hypotenusal (n-1)-volume via the Gram determinant of the edge vectors
// A_1A_2, ..., A_1A_n — the oracle route, no face-volume identity involved.
double hypotenusal_volume_gram(const RightSimplex& s);

// Hypotenusal (n-1)-volume as sqrt(sum of squared leg-face volumes).
double hypotenusal_volume_pythagoras(const RightSimplex& s);

// Height of vertex A_k over the opposite face: a_k for k >= 1,
// (sum 1/a_k^2)^(-1/2) for k = 0.
double height(const RightSimplex& s, int k);

// n-volume: (prod a_k)/n!
double volume(const RightSimplex& s);

// n+1 outward unit normals, index k for face F_k: -e_k for k >= 1, and
// n_0 proportional to (1/a_1, ..., 1/a_n).
std::vector<std::vector<double>> outward_normals(const RightSimplex& s);

// ||sum_k V_k n_k|| / sum_k V_k — the divergence-theorem closure check.
double normal_closure_residual(const RightSimplex& s);

}  // namespace pythag::simplex
