#include "pythag/projections.hpp"

#include <cmath>
#include <stdexcept>

namespace pythag::proj {

ProjectionReport real_projection_volumes(const RealFrame& f) {
    ProjectionReport rep;
    rep.total = linalg::gram_volume(f);
    const auto& indices = linalg::multiindices(f.n(), f.m());
    rep.per_index.reserve(indices.size());
    double sumsq = 0.0;
    for (const auto& I : indices) {
        const double v = std::abs(linalg::minor_det(f, I));
        rep.per_index.emplace_back(I, v);
        sumsq += v * v;
    }
    rep.identity_lhs = rep.total * rep.total;
    rep.identity_rhs = sumsq;
    rep.residual = linalg::residual_of(rep.identity_lhs, rep.identity_rhs);
    return rep;
}

linalg::IdentityCheck corollary_residual(const RealFrame& f, int m) {
    const int p = f.m();
    const int n = f.n();
    if (m < p || m > n) throw std::domain_error("corollary needs p <= m <= n");

    linalg::IdentityCheck out;
    const double v = linalg::gram_volume(f);
    out.lhs = v * v;

    double sumsq = 0.0;
    for (const auto& I : linalg::multiindices(n, m)) {
        // Project every frame vector into C_I (keep the indexed coordinates)
        // and take the p-volume of the projected frame.
        std::vector<std::vector<double>> proj(static_cast<std::size_t>(p),
                                              std::vector<double>(static_cast<std::size_t>(m), 0.0));
        for (int k = 0; k < p; ++k) {
            for (int j = 0; j < m; ++j) {
                proj[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                    f.vec(k)[static_cast<std::size_t>(I.idx[static_cast<std::size_t>(j)] - 1)];
            }
        }
        const double vi = linalg::gram_volume(RealFrame(m, std::move(proj)));
        sumsq += vi * vi;
    }
    out.rhs = sumsq / static_cast<double>(linalg::binomial(n - p, n - m));
    out.residual = linalg::residual_of(out.lhs, out.rhs);
    return out;
}

ProjectionReport complex_line_areas(const std::vector<Complex>& v) {
    if (v.empty()) throw std::domain_error("complex line needs a nonzero vector");
    double total = 0.0;
    for (const auto& z : v) total += std::norm(z);
    if (!(total > 0.0)) throw std::domain_error("complex line needs a nonzero vector");

    ProjectionReport rep;
    rep.per_index.reserve(v.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double ak = std::norm(v[k]);
        rep.per_index.emplace_back(MultiIndex{{static_cast<int>(k) + 1}}, ak);
        sum += ak;
    }
    rep.total = total;
    rep.identity_lhs = total;
    rep.identity_rhs = sum;
    rep.residual = linalg::residual_of(rep.identity_lhs, rep.identity_rhs);
    return rep;
}

ProjectionReport complex_subspace_volumes(const ComplexFrame& f) {
    ProjectionReport rep;
    rep.total = linalg::complex_gram_2m_volume(f);
    const auto& indices = linalg::multiindices(f.n(), f.m());
    rep.per_index.reserve(indices.size());
    double sum = 0.0;
    for (const auto& I : indices) {
        const double v = std::norm(linalg::minor_det(f, I));
        rep.per_index.emplace_back(I, v);
        sum += v;
    }
    rep.identity_lhs = rep.total;
    rep.identity_rhs = sum;
    rep.residual = linalg::residual_of(rep.identity_lhs, rep.identity_rhs);
    return rep;
}

double region_projection_area(const RealFrame& plane, const Polygon& region, const MultiIndex& I) {
    if (plane.m() != 2) throw std::domain_error("region projection needs a plane of two vectors");
    if (linalg::gram_volume(plane) <= 0.0) throw std::domain_error("degenerate plane");
    if (I.idx.size() != 2 || I.idx[0] >= I.idx[1]) {
        throw std::domain_error("region projection targets a coordinate plane");
    }
    for (int i : I.idx) {
        if (i < 1 || i > plane.n()) throw std::domain_error("multi-index out of range");
    }
    if (region.size() < 3) throw std::domain_error("polygon needs at least 3 vertices");
    for (const auto& p : region) {
        if (!std::isfinite(p[0]) || !std::isfinite(p[1])) {
            throw std::domain_error("polygon vertices must be finite");
        }
    }

    const int i0 = I.idx[0] - 1;
    const int i1 = I.idx[1] - 1;
    // Map (s, t) -> s*v1 + t*v2, keep coordinates i0, i1, shoelace.
    double twice_area = 0.0;
    const std::size_t nverts = region.size();
    for (std::size_t k = 0; k < nverts; ++k) {
        const auto& pa = region[k];
        const auto& pb = region[(k + 1) % nverts];
        const double xa = pa[0] * plane.vec(0)[static_cast<std::size_t>(i0)] +
                          pa[1] * plane.vec(1)[static_cast<std::size_t>(i0)];
        const double ya = pa[0] * plane.vec(0)[static_cast<std::size_t>(i1)] +
                          pa[1] * plane.vec(1)[static_cast<std::size_t>(i1)];
        const double xb = pb[0] * plane.vec(0)[static_cast<std::size_t>(i0)] +
                          pb[1] * plane.vec(1)[static_cast<std::size_t>(i0)];
        const double yb = pb[0] * plane.vec(0)[static_cast<std::size_t>(i1)] +
                          pb[1] * plane.vec(1)[static_cast<std::size_t>(i1)];
        twice_area += xa * yb - xb * ya;
    }
    return 0.5 * std::abs(twice_area);
}

}  // namespace pythag::proj
