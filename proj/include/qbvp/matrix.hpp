#ifndef QBVP_MATRIX_HPP
#define QBVP_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "complex.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace qbvp {

// Square-matrix determinant kernels. Exact rings (KPoly, Rational) go
// through fraction-free Bareiss elimination; numeric rings (Real, Complex)
// through partial-pivoted LU. Elimination order is fixed, so results are
// deterministic.
template <class R>
class Matrix {
public:
    Matrix(int n, R fill = ring_traits<R>::zero()) : n_(n), a_(static_cast<size_t>(n) * n, fill) {
        if (n < 1) throw std::invalid_argument("Matrix: dimension must be positive");
    }

    int size() const { return n_; }
    R& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const R& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<R> a_;
};

namespace detail {

inline KPoly exact_div(const KPoly& a, const KPoly& b) { return a.div_exact(b); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

template <class R>
R det_bareiss(Matrix<R> m) {
    const int n = m.size();
    R prev = ring_traits<R>::one();
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (ring_traits<R>::is_zero(m.at(k, k))) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!ring_traits<R>::is_zero(m.at(i, k))) { p = i; break; }
            if (p < 0) return ring_traits<R>::zero();
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                R num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_div(num, prev);
            }
            m.at(i, k) = ring_traits<R>::zero();
        }
        prev = m.at(k, k);
    }
    R d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

template <class R>
Real pivot_magnitude(const R& x);
template <>
inline Real pivot_magnitude<Real>(const Real& x) { return abs(x); }
template <>
inline Real pivot_magnitude<Complex>(const Complex& x) { return abs(x); }

template <class R>
R det_lu(Matrix<R> m) {
    const int n = m.size();
    R det = ring_traits<R>::one();
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        Real best = pivot_magnitude(m.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            Real v = pivot_magnitude(m.at(i, k));
            if (v > best) { best = v; p = i; }
        }
        if (best.is_zero()) return ring_traits<R>::zero();
        if (p != k) {
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        det = det * m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            R f = m.at(i, k) / m.at(k, k);
            for (int j = k + 1; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
        }
    }
    return sign < 0 ? -det : det;
}

}  // namespace detail

inline KPoly det(const Matrix<KPoly>& m) { return detail::det_bareiss(m); }
inline Rational det(const Matrix<Rational>& m) { return detail::det_bareiss(m); }
inline Real det(const Matrix<Real>& m) { return detail::det_lu(m); }
inline Complex det(const Matrix<Complex>& m) { return detail::det_lu(m); }

// Solve A x = b by partial-pivoted elimination (numeric rings).
template <class R>
std::vector<R> solve_linear(Matrix<R> a, std::vector<R> b) {
    const int n = a.size();
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("solve_linear: size mismatch");
    for (int k = 0; k < n; ++k) {
        int p = k;
        Real best = detail::pivot_magnitude(a.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            Real v = detail::pivot_magnitude(a.at(i, k));
            if (v > best) { best = v; p = i; }
        }
        if (best.is_zero()) throw std::domain_error("solve_linear: singular system");
        if (p != k) {
            for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            std::swap(b[k], b[p]);
        }
        for (int i = k + 1; i < n; ++i) {
            R f = a.at(i, k) / a.at(k, k);
            for (int j = k + 1; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(k, j);
            b[i] = b[i] - f * b[k];
        }
    }
    std::vector<R> x(static_cast<size_t>(n), ring_traits<R>::zero());
    for (int i = n - 1; i >= 0; --i) {
        R s = b[i];
        for (int j = i + 1; j < n; ++j) s = s - a.at(i, j) * x[j];
        x[static_cast<size_t>(i)] = s / a.at(i, i);
    }
    return x;
}

}  // namespace qbvp

#endif
