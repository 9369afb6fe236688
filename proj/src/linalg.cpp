#include "heomcast/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heomcast {

CMat::CMat(std::size_t n, std::initializer_list<cplx> values) : n_(n), a_(values) {
    if (a_.size() != n * n) throw std::invalid_argument("CMat: initializer size mismatch");
}

CMat CMat::identity(std::size_t n) {
    CMat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double CMat::hermiticity_deviation() const {
    double dev = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return dev;
}

cplx CMat::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

static void check_same_dim(const CMat& a, const CMat& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

CMat operator+(const CMat& a, const CMat& b) {
    check_same_dim(a, b);
    CMat r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

CMat operator-(const CMat& a, const CMat& b) {
    check_same_dim(a, b);
    CMat r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

CMat operator*(const CMat& a, const CMat& b) {
    check_same_dim(a, b);
    const std::size_t n = a.dim();
    CMat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

CMat operator*(cplx s, const CMat& a) {
    CMat r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
    return r;
}

double max_abs_diff(const CMat& a, const CMat& b) {
    check_same_dim(a, b);
    double dev = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            dev = std::max(dev, std::abs(a(i, j) - b(i, j)));
    return dev;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("symmetric_eigenvalues: size mismatch");
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(at(i, i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) scale = std::max(scale, std::abs(at(i, j)));
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(at(i, j)));
        if (off <= 1e-15 * scale) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= 1e-18 * scale) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> hermitian_eigenvalues(const CMat& m) {
    const std::size_t n = m.dim();
    // symmetrize so that slightly non-Hermitian inputs still give real spectra
    std::vector<double> big(4 * n * n, 0.0);
    auto bt = [&](std::size_t i, std::size_t j) -> double& { return big[i * 2 * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx h = 0.5 * (m(i, j) + std::conj(m(j, i)));
            bt(i, j) = h.real();
            bt(n + i, n + j) = h.real();
            bt(i, n + j) = -h.imag();
            bt(n + i, j) = h.imag();
        }
    }
    const std::vector<double> doubled = symmetric_eigenvalues(std::move(big), 2 * n);
    // eigenvalues come in duplicated pairs; take every other one
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = doubled[2 * i];
    return eig;
}

LeastSquaresResult least_squares(const std::vector<double>& x, std::size_t rows,
                                 std::size_t cols, const std::vector<double>& y,
                                 double rank_tol) {
    if (x.size() != rows * cols || y.size() != rows)
        throw std::invalid_argument("least_squares: size mismatch");
    if (rows < cols) throw std::invalid_argument("least_squares: underdetermined system");

    std::vector<double> a = x;
    std::vector<double> b = y;
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * cols + j]; };

    // Householder QR, transforming b in place.
    std::vector<double> v(rows);
    for (std::size_t k = 0; k < cols; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < rows; ++i) norm += at(i, k) * at(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = at(k, k) >= 0.0 ? -norm : norm;
        double vnorm2 = 0.0;
        for (std::size_t i = k; i < rows; ++i) {
            v[i] = at(i, k);
            if (i == k) v[i] -= alpha;
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) continue;
        for (std::size_t j = k; j < cols; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < rows; ++i) dot += v[i] * at(i, j);
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < rows; ++i) at(i, j) -= f * v[i];
        }
        double dotb = 0.0;
        for (std::size_t i = k; i < rows; ++i) dotb += v[i] * b[i];
        const double fb = 2.0 * dotb / vnorm2;
        for (std::size_t i = k; i < rows; ++i) b[i] -= fb * v[i];
    }

    LeastSquaresResult res;
    const double pivot_scale = std::max(std::abs(at(0, 0)), 1e-300);
    for (std::size_t k = 0; k < cols; ++k) {
        if (std::abs(at(k, k)) < rank_tol * pivot_scale) {
            res.rank_deficient = true;
            return res;
        }
    }

    res.coeffs.assign(cols, 0.0);
    for (std::size_t k = cols; k-- > 0;) {
        double s = b[k];
        for (std::size_t j = k + 1; j < cols; ++j) s -= at(k, j) * res.coeffs[j];
        res.coeffs[k] = s / at(k, k);
    }
    return res;
}

std::vector<cplx> polynomial_roots(const std::vector<double>& coeffs) {
    std::vector<double> c = coeffs;
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * scale) c.pop_back();
    const std::size_t deg = c.empty() ? 0 : c.size() - 1;
    if (deg == 0) return {};

    std::vector<cplx> z(deg);
    const cplx seed(0.4, 0.9);
    cplx w = seed;
    for (std::size_t i = 0; i < deg; ++i) {
        z[i] = w;
        w *= seed;
    }

    auto eval = [&](cplx x) {
        cplx p = c[deg];
        for (std::size_t k = deg; k-- > 0;) p = p * x + c[k];
        return p;
    };

    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            cplx denom = c[deg];
            for (std::size_t j = 0; j < deg; ++j) {
                if (j != i) denom *= z[i] - z[j];
            }
            if (std::abs(denom) < 1e-300) continue;
            const cplx step = eval(z[i]) / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-13) break;
    }
    return z;
}

} // namespace heomcast
