#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace heomcast {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMat {
public:
    CMat() = default;
    explicit CMat(std::size_t n) : n_(n), a_(n * n) {}
    CMat(std::size_t n, std::initializer_list<cplx> values);

    std::size_t dim() const { return n_; }
    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::span<cplx> span() { return a_; }
    std::span<const cplx> span() const { return a_; }

    static CMat identity(std::size_t n);

    /// max_ij |A_ij - conj(A_ji)|
    double hermiticity_deviation() const;
    cplx trace() const;

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

CMat operator+(const CMat& a, const CMat& b);
CMat operator-(const CMat& a, const CMat& b);
CMat operator*(const CMat& a, const CMat& b);
CMat operator*(cplx s, const CMat& a);
double max_abs_diff(const CMat& a, const CMat& b);

/// Eigenvalues of a real symmetric matrix (row-major, n x n) by cyclic Jacobi,
/// returned in ascending order.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

/// Eigenvalues of a complex Hermitian matrix (the matrix is symmetrized
/// first), ascending. Uses the real 2n x 2n embedding [[Re,-Im],[Im,Re]].
std::vector<double> hermitian_eigenvalues(const CMat& m);

/// Least squares solution of X b = y by Householder QR.
/// X is row-major with `rows` x `cols`. If a diagonal of R collapses below
/// rank_tol * |R_00| the system is reported rank deficient and b is empty.
struct LeastSquaresResult {
    std::vector<double> coeffs;
    bool rank_deficient = false;
};
LeastSquaresResult least_squares(const std::vector<double>& x, std::size_t rows,
                                 std::size_t cols, const std::vector<double>& y,
                                 double rank_tol = 1e-12);

/// Roots of c_0 + c_1 z + ... + c_n z^n by Durand-Kerner iteration.
/// Trailing (near-)zero high-order coefficients are trimmed first.
std::vector<cplx> polynomial_roots(const std::vector<double>& coeffs);

} // namespace heomcast
