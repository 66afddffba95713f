#include "pythag/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace pythag::linalg {

namespace {

constexpr std::uint64_t kMaxIndexSetSize = 2'000'000;

template <class T>
bool entry_finite(const T& v) {
    if constexpr (std::is_same_v<T, Complex>) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    } else {
        return std::isfinite(v);
    }
}

template <class T>
void validate_frame(int n, const std::vector<std::vector<T>>& vectors) {
    const int m = static_cast<int>(vectors.size());
    if (n < 1) throw std::invalid_argument("frame: ambient dimension must be >= 1");
    if (m < 1 || m > n) throw std::invalid_argument("frame: need 1 <= m <= n vectors");
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != n) {
            throw std::invalid_argument("frame: every vector must have n entries");
        }
        for (const auto& e : v) {
            if (!entry_finite(e)) throw std::invalid_argument("frame: entries must be finite");
        }
    }
}

template <class T>
T det_full_pivot(std::vector<T>& a, int k) {
    if (k == 1) return a[0];
    if (k == 2) return a[0] * a[3] - a[1] * a[2];
    double sign = 1.0;
    for (int s = 0; s < k; ++s) {
        int pr = s, pc = s;
        double best = std::abs(a[static_cast<std::size_t>(s) * k + s]);
        for (int r = s; r < k; ++r) {
            for (int c = s; c < k; ++c) {
                const double mag = std::abs(a[static_cast<std::size_t>(r) * k + c]);
                if (mag > best) {
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (best == 0.0) return T{};
        if (pr != s) {
            for (int c = 0; c < k; ++c) {
                std::swap(a[static_cast<std::size_t>(s) * k + c], a[static_cast<std::size_t>(pr) * k + c]);
            }
            sign = -sign;
        }
        if (pc != s) {
            for (int r = 0; r < k; ++r) {
                std::swap(a[static_cast<std::size_t>(r) * k + s], a[static_cast<std::size_t>(r) * k + pc]);
            }
            sign = -sign;
        }
        const T pivot = a[static_cast<std::size_t>(s) * k + s];
        for (int r = s + 1; r < k; ++r) {
            const T factor = a[static_cast<std::size_t>(r) * k + s] / pivot;
            a[static_cast<std::size_t>(r) * k + s] = T{};
            for (int c = s + 1; c < k; ++c) {
                a[static_cast<std::size_t>(r) * k + c] -= factor * a[static_cast<std::size_t>(s) * k + c];
            }
        }
    }
    T det = a[0];
    for (int s = 1; s < k; ++s) det *= a[static_cast<std::size_t>(s) * k + s];
    return det * sign;
}

template <class Frame>
void validate_index(const Frame& f, const MultiIndex& I) {
    if (static_cast<int>(I.idx.size()) != f.m()) {
        throw std::domain_error("multi-index size must equal the frame's vector count");
    }
    int prev = 0;
    for (int i : I.idx) {
        if (i <= prev || i > f.n()) throw std::domain_error("multi-index out of range");
        prev = i;
    }
}

template <class Frame, class T>
T minor_impl(const Frame& f, const MultiIndex& I) {
    validate_index(f, I);
    const int m = f.m();
    std::vector<T> sub(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r) {
        const int row = I.idx[static_cast<std::size_t>(r)] - 1;
        for (int c = 0; c < m; ++c) {
            sub[static_cast<std::size_t>(r) * m + c] = f.vec(c)[static_cast<std::size_t>(row)];
        }
    }
    return det_full_pivot(sub, m);
}

}  // namespace

const std::vector<MultiIndex>& multiindices(int n, int m) {
    if (m < 1 || m > n) throw std::domain_error("multiindices: need 1 <= m <= n");
    if (binomial(n, m) > kMaxIndexSetSize) throw std::domain_error("multiindices: index set too large");

    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = cache.try_emplace({n, m});
    if (fresh) {
        std::vector<int> cur(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            it->second.push_back(MultiIndex{cur});
            int p = m - 1;
            while (p >= 0 && cur[static_cast<std::size_t>(p)] == n - m + p + 1) --p;
            if (p < 0) break;
            ++cur[static_cast<std::size_t>(p)];
            for (int q = p + 1; q < m; ++q) {
                cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(q - 1)] + 1;
            }
        }
    }
    return it->second;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n > 62) throw std::domain_error("binomial: n too large for exact 64-bit arithmetic");
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return c;
}

RealFrame::RealFrame(int n, std::vector<std::vector<double>> vectors) : n_(n), vectors_(std::move(vectors)) {
    validate_frame(n_, vectors_);
}

ComplexFrame::ComplexFrame(int n, std::vector<std::vector<Complex>> vectors)
    : n_(n), vectors_(std::move(vectors)) {
    validate_frame(n_, vectors_);
}

double minor_det(const RealFrame& f, const MultiIndex& I) { return minor_impl<RealFrame, double>(f, I); }

Complex minor_det(const ComplexFrame& f, const MultiIndex& I) {
    return minor_impl<ComplexFrame, Complex>(f, I);
}

double gram_volume(const RealFrame& f) {
    const int m = f.m();
    std::vector<double> g(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            double dot = 0.0;
            for (int i = 0; i < f.n(); ++i) {
                dot += f.vec(r)[static_cast<std::size_t>(i)] * f.vec(c)[static_cast<std::size_t>(i)];
            }
            g[static_cast<std::size_t>(r) * m + c] = dot;
        }
    }
    return std::sqrt(std::max(detail::det_inplace(g, m), 0.0));
}

double complex_gram_2m_volume(const ComplexFrame& f) {
    const int m = f.m();
    std::vector<Complex> g(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            Complex dot{};
            for (int i = 0; i < f.n(); ++i) {
                dot += std::conj(f.vec(r)[static_cast<std::size_t>(i)]) * f.vec(c)[static_cast<std::size_t>(i)];
            }
            g[static_cast<std::size_t>(r) * m + c] = dot;
        }
    }
    return std::max(detail::det_inplace(g, m).real(), 0.0);
}

IdentityCheck cauchy_binet_residual(const RealFrame& f) {
    IdentityCheck out;
    out.lhs = gram_volume(f);
    out.lhs *= out.lhs;
    for (const auto& I : multiindices(f.n(), f.m())) {
        const double d = minor_det(f, I);
        out.rhs += d * d;
    }
    out.residual = residual_of(out.lhs, out.rhs);
    return out;
}

IdentityCheck cauchy_binet_residual(const ComplexFrame& f) {
    IdentityCheck out;
    out.lhs = complex_gram_2m_volume(f);
    for (const auto& I : multiindices(f.n(), f.m())) {
        out.rhs += std::norm(minor_det(f, I));
    }
    out.residual = residual_of(out.lhs, out.rhs);
    return out;
}

double wedge_norm(const RealFrame& f) {
    double sumsq = 0.0;
    for (const auto& I : multiindices(f.n(), f.m())) {
        const double d = minor_det(f, I);
        sumsq += d * d;
    }
    return std::sqrt(sumsq);
}

std::vector<double> realify_vector(const std::vector<Complex>& v) {
    std::vector<double> out;
    out.reserve(2 * v.size());
    for (const auto& z : v) {
        out.push_back(z.real());
        out.push_back(z.imag());
    }
    return out;
}

RealFrame realify(const ComplexFrame& f) {
    std::vector<std::vector<double>> vecs;
    vecs.reserve(2 * static_cast<std::size_t>(f.m()));
    for (int k = 0; k < f.m(); ++k) {
        std::vector<Complex> iv(f.vec(k));
        for (auto& z : iv) z *= Complex{0.0, 1.0};
        vecs.push_back(realify_vector(f.vec(k)));
        vecs.push_back(realify_vector(iv));
    }
    return RealFrame(2 * f.n(), std::move(vecs));
}

double residual_of(double lhs, double rhs) { return std::abs(lhs - rhs) / std::max(lhs, 1.0); }

namespace detail {

double det_inplace(std::vector<double>& a, int k) { return det_full_pivot(a, k); }

Complex det_inplace(std::vector<Complex>& a, int k) { return det_full_pivot(a, k); }

}  // namespace detail

}  // namespace pythag::linalg
