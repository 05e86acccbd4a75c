#ifndef QBVP_SERIES_HPP
#define QBVP_SERIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"
#include "ring.hpp"

namespace qbvp {

// Truncated power series of order M: exactly M+1 coefficients in a uniform
// ring R (KPoly for exact mode, Real/Complex at fixed k for numeric mode).
template <class R>
class Series {
public:
    Series() = default;
    Series(std::vector<R> coeffs, std::string var = "z")
        : c_(std::move(coeffs)), var_(std::move(var)) {
        if (c_.empty()) throw std::invalid_argument("Series: needs at least the constant term");
    }

    static Series constant(R value, int order, std::string var = "z") {
        std::vector<R> c(static_cast<size_t>(order) + 1, ring_traits<R>::zero());
        c[0] = std::move(value);
        return Series(std::move(c), std::move(var));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::string& var() const { return var_; }
    const R& operator[](size_t i) const { return c_.at(i); }
    R& operator[](size_t i) { return c_.at(i); }
    const std::vector<R>& coeffs() const { return c_; }

    Series truncated(int order) const {
        if (order >= this->order()) return *this;
        return Series(std::vector<R>(c_.begin(), c_.begin() + order + 1), var_);
    }

    Series with_var(std::string v) const { return Series(c_, std::move(v)); }

private:
    std::vector<R> c_;
    std::string var_;
};

namespace detail {
template <class R>
void check_compatible(const Series<R>& a, const Series<R>& b) {
    if (a.var() != b.var())
        throw std::invalid_argument("Series: variable mismatch (" + a.var() + " vs " + b.var() + ")");
}
}  // namespace detail

template <class R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) {
    detail::check_compatible(a, b);
    int m = std::min(a.order(), b.order());
    std::vector<R> c(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) c[i] = a[i] + b[i];
    return Series<R>(std::move(c), a.var());
}

template <class R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) {
    detail::check_compatible(a, b);
    int m = std::min(a.order(), b.order());
    std::vector<R> c(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) c[i] = a[i] - b[i];
    return Series<R>(std::move(c), a.var());
}

template <class R>
Series<R> operator-(const Series<R>& a) {
    std::vector<R> c(a.coeffs());
    for (auto& x : c) x = -x;
    return Series<R>(std::move(c), a.var());
}

// Cauchy product truncated at min(a.M, b.M). Fixed summation order keeps
// numeric results scheduling-independent.
template <class R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) {
    detail::check_compatible(a, b);
    int m = std::min(a.order(), b.order());
    std::vector<R> c(static_cast<size_t>(m) + 1, ring_traits<R>::zero());
    for (int i = 0; i <= m; ++i) {
        if (ring_traits<R>::is_zero(a[i])) continue;
        for (int j = 0; i + j <= m && j <= b.order(); ++j) c[i + j].add_mul(a[i], b[j]);
    }
    return Series<R>(std::move(c), a.var());
}

template <class R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) { return series_mul(a, b); }

template <class R>
Series<R> series_scale(const Series<R>& a, const R& s) {
    std::vector<R> c(a.coeffs());
    for (auto& x : c) x = x * s;
    return Series<R>(std::move(c), a.var());
}

// Derivative: order drops by one.
template <class R>
Series<R> series_diff(const Series<R>& a) {
    if (a.order() < 1) throw std::invalid_argument("series_diff: order must be >= 1");
    std::vector<R> c(static_cast<size_t>(a.order()));
    for (int i = 1; i <= a.order(); ++i) c[i - 1] = a[i] * ring_traits<R>::from(Rational(i));
    return Series<R>(std::move(c), a.var());
}

// outer(inner(w)): inner must have zero constant term. Horner on series.
template <class R>
Series<R> series_compose(const Series<R>& outer, const Series<R>& inner) {
    if (!ring_traits<R>::is_zero(inner[0]))
        throw std::invalid_argument("series_compose: inner constant term must vanish");
    int m = std::min(outer.order(), inner.order());
    Series<R> inner_t = inner.truncated(m);
    Series<R> acc = Series<R>::constant(outer[static_cast<size_t>(outer.order())], m, inner.var());
    for (int i = outer.order() - 1; i >= 0; --i) {
        acc = series_mul(acc, inner_t);
        acc[0] = acc[0] + outer[static_cast<size_t>(i)];
    }
    return acc;
}

// Binomial series of (1+w)^alpha through order M; exact whenever the ring
// carries exact rationals and alpha is rational.
template <class R>
Series<R> binomial_series(const R& alpha, int M, std::string var = "w") {
    std::vector<R> c(static_cast<size_t>(M) + 1);
    c[0] = ring_traits<R>::one();
    for (int n = 0; n < M; ++n) {
        // b_{n+1} = b_n (alpha - n) / (n + 1)
        R t = c[n] * (alpha - ring_traits<R>::from(Rational(n)));
        c[n + 1] = t * ring_traits<R>::from(Rational(1, n + 1));
    }
    return Series<R>(std::move(c), std::move(var));
}

// Horner partial sums. Concrete overloads for the value/coefficient pairs
// used across the solvers.
inline Real series_eval(const Series<Real>& s, const Real& z) {
    Real acc = s[static_cast<size_t>(s.order())];
    for (int i = s.order() - 1; i >= 0; --i) { acc *= z; acc += s[static_cast<size_t>(i)]; }
    return acc;
}

inline Complex series_eval(const Series<Real>& s, const Complex& z) {
    Complex acc(s[static_cast<size_t>(s.order())]);
    for (int i = s.order() - 1; i >= 0; --i) acc = acc * z + Complex(s[static_cast<size_t>(i)]);
    return acc;
}

inline Complex series_eval(const Series<Complex>& s, const Complex& z) {
    Complex acc = s[static_cast<size_t>(s.order())];
    for (int i = s.order() - 1; i >= 0; --i) acc = acc * z + s[static_cast<size_t>(i)];
    return acc;
}

inline Rational series_eval(const Series<Rational>& s, const Rational& z) {
    Rational acc = s[static_cast<size_t>(s.order())];
    for (int i = s.order() - 1; i >= 0; --i) { acc *= z; acc += s[static_cast<size_t>(i)]; }
    return acc;
}

inline Real series_eval(const Series<Rational>& s, const Real& z) {
    Real acc = s[static_cast<size_t>(s.order())].to_real();
    for (int i = s.order() - 1; i >= 0; --i) { acc *= z; acc += s[static_cast<size_t>(i)].to_real(); }
    return acc;
}

// Exact series evaluated at (z, k): coefficients are polynomials in k.
inline Real series_eval_at(const Series<KPoly>& s, const Real& z, const Real& k) {
    Real acc = s[static_cast<size_t>(s.order())].eval(k);
    for (int i = s.order() - 1; i >= 0; --i) { acc *= z; acc += s[static_cast<size_t>(i)].eval(k); }
    return acc;
}

// Evaluate every coefficient of an exact series at k.
inline Series<Real> series_at_k(const Series<KPoly>& s, const Real& k) {
    std::vector<Real> c;
    c.reserve(static_cast<size_t>(s.order()) + 1);
    for (int i = 0; i <= s.order(); ++i) c.push_back(s[static_cast<size_t>(i)].eval(k));
    return Series<Real>(std::move(c), s.var());
}

inline Series<Real> series_to_real(const Series<Rational>& s) {
    std::vector<Real> c;
    c.reserve(static_cast<size_t>(s.order()) + 1);
    for (int i = 0; i <= s.order(); ++i) c.push_back(s[static_cast<size_t>(i)].to_real());
    return Series<Real>(std::move(c), s.var());
}

}  // namespace qbvp

#endif
