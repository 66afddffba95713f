#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <vector>

namespace pythag::linalg {

using Complex = std::complex<double>;

// Strictly increasing 1-based index tuple selecting a coordinate subspace.
struct MultiIndex {
    std::vector<int> idx;

    auto operator<=>(const MultiIndex&) const = default;
};

// All C(n, m) multi-indices in lexicographic order; cached per (n, m).
// Throws std::domain_error unless 1 <= m <= n.
const std::vector<MultiIndex>& multiindices(int n, int m);

std::uint64_t binomial(int n, int k);

// Ordered list of m vectors in R^n (the columns of the frame matrix M).
class RealFrame {
public:
    RealFrame(int n, std::vector<std::vector<double>> vectors);

    int n() const { return n_; }
    int m() const { return static_cast<int>(vectors_.size()); }
    const std::vector<double>& vec(int k) const { return vectors_[static_cast<std::size_t>(k)]; }
    const std::vector<std::vector<double>>& vectors() const { return vectors_; }

private:
    int n_;
    std::vector<std::vector<double>> vectors_;
};

// Same thing over C^n.
class ComplexFrame {
public:
    ComplexFrame(int n, std::vector<std::vector<Complex>> vectors);

    int n() const { return n_; }
    int m() const { return static_cast<int>(vectors_.size()); }
    const std::vector<Complex>& vec(int k) const { return vectors_[static_cast<std::size_t>(k)]; }
    const std::vector<std::vector<Complex>>& vectors() const { return vectors_; }

private:
    int n_;
    std::vector<std::vector<Complex>> vectors_;
};

// det of the m x m submatrix formed by the rows indexed by I.
double minor_det(const RealFrame& f, const MultiIndex& I);
Complex minor_det(const ComplexFrame& f, const MultiIndex& I);

// sqrt(det(M^T M)): the parallelotope's m-volume. Zero iff dependent.
double gram_volume(const RealFrame& f);

// det(M^dagger M): real, >= 0, and itself the 2m-volume of the parallelotope
// spanned by v1, i v1, ..., vm, i vm (not its square root).
double complex_gram_2m_volume(const ComplexFrame& f);

struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // |lhs - rhs| / max(lhs, 1)
};

// lhs = det(M^T M) (resp. det(M^dagger M)), rhs = sum of squared minors
// (resp. squared minor magnitudes) over all multi-indices.
IdentityCheck cauchy_binet_residual(const RealFrame& f);
IdentityCheck cauchy_binet_residual(const ComplexFrame& f);

// Euclidean norm of the component vector (det(M_I))_I of v1 ^ ... ^ vm.
double wedge_norm(const RealFrame& f);

// (z1,...,zn) -> (x1,y1,...,xn,yn); output vectors v1, iv1, ..., vm, ivm.
RealFrame realify(const ComplexFrame& f);
std::vector<double> realify_vector(const std::vector<Complex>& v);

double residual_of(double lhs, double rhs);

namespace detail {
// In-place determinant of a row-major k x k matrix. Complete pivoting: the
// result is column-permutation-equivariant bit for bit (ties aside), which
// the frame-swap invariants rely on.
double det_inplace(std::vector<double>& a, int k);
Complex det_inplace(std::vector<Complex>& a, int k);
}  // namespace detail

}  // namespace pythag::linalg
