#include "pythag/simplex.hpp"

#include <cmath>
#include <stdexcept>

#include "pythag/linalg.hpp"

namespace pythag::simplex {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

RightSimplex::RightSimplex(std::vector<double> legs) : legs_(std::move(legs)) {
    if (legs_.size() < 2) throw std::invalid_argument("right simplex needs at least 2 legs");
    if (legs_.size() > 20) throw std::invalid_argument("right simplex supports at most 20 legs");
    for (double a : legs_) {
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw std::invalid_argument("every leg must be finite and > 0");
        }
    }
}

double RightSimplex::leg(int k) const {
    if (k < 1 || k > n()) throw std::domain_error("leg index out of range");
    return legs_[static_cast<std::size_t>(k - 1)];
}

double leg_face_volume(const RightSimplex& s, int k) {
    if (k == 0) throw std::domain_error("face 0 is the hypotenusal face; use the hypotenusal routes");
    if (k < 1 || k > s.n()) throw std::domain_error("face index out of range");
    double prod = 1.0;
    for (int j = 1; j <= s.n(); ++j) {
        if (j != k) prod *= s.leg(j);
    }
    return prod / factorial(s.n() - 1);
}

double hypotenusal_volume_gram(const RightSimplex& s) {
    const int n = s.n();
    // Edge vectors A_1A_k = a_k e_k - a_1 e_1 for k = 2..n.
    std::vector<std::vector<double>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int k = 2; k <= n; ++k) {
        std::vector<double> e(static_cast<std::size_t>(n), 0.0);
        e[0] = -s.leg(1);
        e[static_cast<std::size_t>(k - 1)] = s.leg(k);
        edges.push_back(std::move(e));
    }
    return linalg::gram_volume(linalg::RealFrame(n, std::move(edges))) / factorial(n - 1);
}

double hypotenusal_volume_pythagoras(const RightSimplex& s) {
    double sumsq = 0.0;
    for (int k = 1; k <= s.n(); ++k) {
        const double v = leg_face_volume(s, k);
        sumsq += v * v;
    }
    return std::sqrt(sumsq);
}

double height(const RightSimplex& s, int k) {
    if (k < 0 || k > s.n()) throw std::domain_error("vertex index out of range");
    if (k >= 1) return s.leg(k);
    double inv = 0.0;
    for (int j = 1; j <= s.n(); ++j) inv += 1.0 / (s.leg(j) * s.leg(j));
    return 1.0 / std::sqrt(inv);
}

double volume(const RightSimplex& s) {
    double prod = 1.0;
    for (int j = 1; j <= s.n(); ++j) prod *= s.leg(j);
    return prod / factorial(s.n());
}

std::vector<std::vector<double>> outward_normals(const RightSimplex& s) {
    const int n = s.n();
    std::vector<std::vector<double>> normals(static_cast<std::size_t>(n + 1),
                                             std::vector<double>(static_cast<std::size_t>(n), 0.0));
    double len = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double inv = 1.0 / s.leg(j);
        normals[0][static_cast<std::size_t>(j - 1)] = inv;
        len += inv * inv;
    }
    len = std::sqrt(len);
    for (int j = 1; j <= n; ++j) {
        normals[0][static_cast<std::size_t>(j - 1)] /= len;
        normals[static_cast<std::size_t>(j)][static_cast<std::size_t>(j - 1)] = -1.0;
    }
    return normals;
}

double normal_closure_residual(const RightSimplex& s) {
    const auto normals = outward_normals(s);
    const int n = s.n();
    std::vector<double> acc(static_cast<std::size_t>(n), 0.0);
    double total = hypotenusal_volume_gram(s);
    for (int j = 0; j < n; ++j) {
        acc[static_cast<std::size_t>(j)] += total * normals[0][static_cast<std::size_t>(j)];
    }
    for (int k = 1; k <= n; ++k) {
        const double v = leg_face_volume(s, k);
        total += v;
        for (int j = 0; j < n; ++j) {
            acc[static_cast<std::size_t>(j)] += v * normals[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        }
    }
    double sq = 0.0;
    for (double x : acc) sq += x * x;
    return std::sqrt(sq) / total;
}

}  // namespace pythag::simplex
