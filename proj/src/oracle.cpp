#include "pythag/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pythag/rng.hpp"

namespace pythag::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kChunk = 4096;

// Pivoted LU of a small dense matrix, kept only to solve membership systems.
struct LuSolver {
    int m = 0;
    std::vector<double> lu;    // row-major
    std::vector<int> perm;

    bool factor(std::vector<double> a, int size) {
        m = size;
        lu = std::move(a);
        perm.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int s = 0; s < m; ++s) {
            int pr = s;
            double best = std::abs(lu[static_cast<std::size_t>(s) * m + s]);
            for (int r = s + 1; r < m; ++r) {
                const double mag = std::abs(lu[static_cast<std::size_t>(r) * m + s]);
                if (mag > best) {
                    best = mag;
                    pr = r;
                }
            }
            if (best == 0.0) return false;
            if (pr != s) {
                for (int c = 0; c < m; ++c) {
                    std::swap(lu[static_cast<std::size_t>(s) * m + c], lu[static_cast<std::size_t>(pr) * m + c]);
                }
                std::swap(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(pr)]);
            }
            const double pivot = lu[static_cast<std::size_t>(s) * m + s];
            for (int r = s + 1; r < m; ++r) {
                const double factor = lu[static_cast<std::size_t>(r) * m + s] / pivot;
                lu[static_cast<std::size_t>(r) * m + s] = factor;
                for (int c = s + 1; c < m; ++c) {
                    lu[static_cast<std::size_t>(r) * m + c] -= factor * lu[static_cast<std::size_t>(s) * m + c];
                }
            }
        }
        return true;
    }

    // Solves A t = rhs with rhs already in original row order.
    void solve(const double* rhs, double* t) const {
        for (int i = 0; i < m; ++i) {
            double acc = rhs[perm[static_cast<std::size_t>(i)]];
            for (int j = 0; j < i; ++j) acc -= lu[static_cast<std::size_t>(i) * m + j] * t[j];
            t[i] = acc;
        }
        for (int i = m - 1; i >= 0; --i) {
            double acc = t[i];
            for (int j = i + 1; j < m; ++j) acc -= lu[static_cast<std::size_t>(i) * m + j] * t[j];
            t[i] = acc / lu[static_cast<std::size_t>(i) * m + i];
        }
    }
};

double circumference(const curved::Geometry& g, double t) {
    switch (g.kind()) {
        case curved::Kind::spherical:
            return 2.0 * kPi * g.radius() * std::sin(t / g.radius());
        case curved::Kind::hyperbolic:
            return 2.0 * kPi * g.radius() * std::sinh(t / g.radius());
        case curved::Kind::euclidean:
            return 2.0 * kPi * t;
    }
    return 0.0;
}

}  // namespace

McEstimate mc_parallelotope_volume(const linalg::RealFrame& f, std::uint64_t samples,
                                   std::uint64_t seed, par::Mode mode) {
    if (samples < 1000) throw std::domain_error("monte carlo estimate needs at least 1000 samples");
    const int n = f.n();
    const int m = f.m();

    // Orthonormal basis of the span (modified Gram-Schmidt, run twice).
    std::vector<std::vector<double>> basis;
    basis.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        std::vector<double> w = f.vec(k);
        double original = 0.0;
        for (double x : w) original += x * x;
        original = std::sqrt(original);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) {
                double proj = 0.0;
                for (int i = 0; i < n; ++i) proj += w[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(i)];
                for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= proj * q[static_cast<std::size_t>(i)];
            }
        }
        double len = 0.0;
        for (double x : w) len += x * x;
        len = std::sqrt(len);
        if (!(len > 1e-13 * std::max(original, 1e-300))) {
            return McEstimate{0.0, 0.0, samples, seed};  // dependent vectors
        }
        for (double& x : w) x /= len;
        basis.push_back(std::move(w));
    }

    // Span coordinates of the generators: W[j][k] = <q_j, v_k>.
    std::vector<double> w(static_cast<std::size_t>(m) * m);
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) {
                dot += basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                       f.vec(k)[static_cast<std::size_t>(i)];
            }
            w[static_cast<std::size_t>(j) * m + k] = dot;
        }
    }

    // Bounding box of {W t : t in [0,1]^m} along each span axis.
    std::vector<double> lo(static_cast<std::size_t>(m), 0.0), hi(static_cast<std::size_t>(m), 0.0);
    double box_volume = 1.0;
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            const double e = w[static_cast<std::size_t>(j) * m + k];
            (e < 0.0 ? lo : hi)[static_cast<std::size_t>(j)] += e;
        }
        box_volume *= hi[static_cast<std::size_t>(j)] - lo[static_cast<std::size_t>(j)];
    }

    LuSolver solver;
    if (!solver.factor(w, m)) {
        return McEstimate{0.0, 0.0, samples, seed};
    }

    const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<std::uint64_t> hits(chunks, 0);
    par::for_each_index(chunks, mode, [&](std::size_t c) {
        auto eng = rng::stream(seed, c);
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, samples);
        std::vector<double> x(static_cast<std::size_t>(m)), t(static_cast<std::size_t>(m));
        std::uint64_t local = 0;
        for (std::uint64_t s = begin; s < end; ++s) {
            for (int j = 0; j < m; ++j) {
                x[static_cast<std::size_t>(j)] =
                    rng::uniform(eng, lo[static_cast<std::size_t>(j)], hi[static_cast<std::size_t>(j)]);
            }
            solver.solve(x.data(), t.data());
            bool inside = true;
            for (int j = 0; j < m; ++j) {
                const double tj = t[static_cast<std::size_t>(j)];
                if (!(tj >= 0.0 && tj <= 1.0)) {
                    inside = false;
                    break;
                }
            }
            if (inside) ++local;
        }
        hits[c] = local;
    });

    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;
    const double p = static_cast<double>(total) / static_cast<double>(samples);
    McEstimate est;
    est.value = box_volume * p;
    est.std_error = box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    return est;
}

double quadrature_disk_area(const curved::Geometry& g, double r, std::uint64_t steps, par::Mode mode) {
    if (steps < 100) throw std::domain_error("quadrature needs at least 100 steps");
    if (!(r >= 0.0) || !std::isfinite(r)) throw std::domain_error("disk radius must be finite and >= 0");
    if (g.kind() == curved::Kind::spherical && !(r <= kPi * g.radius())) {
        throw std::domain_error("spherical disk radius must stay within pi*R");
    }

    const double h = r / static_cast<double>(steps);
    const std::uint64_t chunks = (steps + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
    par::for_each_index(chunks, mode, [&](std::size_t c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, steps);
        double acc = 0.0;
        for (std::uint64_t i = begin; i < end; ++i) {
            acc += circumference(g, (static_cast<double>(i) + 0.5) * h);
        }
        partial[c] = acc;
    });

    double sum = 0.0;
    for (double p : partial) sum += p;  // fixed chunk order: deterministic
    return sum * h;
}

double embedded_hypotenuse(const curved::Geometry& g, double b, double c) {
    if (!(b >= 0.0) || !std::isfinite(b) || !(c >= 0.0) || !std::isfinite(c)) {
        throw std::domain_error("legs must be finite and >= 0");
    }
    switch (g.kind()) {
        case curved::Kind::spherical: {
            const double r = g.radius();
            if (!(b < kPi * r) || !(c < kPi * r)) {
                throw std::domain_error("spherical legs must stay below pi*R");
            }
            const double pb[3] = {r * std::cos(b / r), r * std::sin(b / r), 0.0};
            const double pc[3] = {r * std::cos(c / r), 0.0, r * std::sin(c / r)};
            const double dot = pb[0] * pc[0] + pb[1] * pc[1] + pb[2] * pc[2];
            return r * std::acos(std::clamp(dot / (r * r), -1.0, 1.0));
        }
        case curved::Kind::hyperbolic: {
            const double r = g.radius();
            const double pb[3] = {r * std::cosh(b / r), r * std::sinh(b / r), 0.0};
            const double pc[3] = {r * std::cosh(c / r), 0.0, r * std::sinh(c / r)};
            const double mdot = pb[0] * pc[0] - pb[1] * pc[1] - pb[2] * pc[2];
            return r * std::acosh(std::max(mdot / (r * r), 1.0));
        }
        case curved::Kind::euclidean: {
            const double pb[3] = {b, 0.0, 0.0};
            const double pc[3] = {0.0, c, 0.0};
            const double dx = pb[0] - pc[0], dy = pb[1] - pc[1], dz = pb[2] - pc[2];
            return std::sqrt(dx * dx + dy * dy + dz * dz);
        }
    }
    return 0.0;
}

}  // namespace pythag::oracle
