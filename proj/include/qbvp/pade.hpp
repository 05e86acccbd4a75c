#ifndef QBVP_PADE_HPP
#define QBVP_PADE_HPP

#include <cmath>
#include <memory>
#include <optional>

#include "condition.hpp"
#include "matrix.hpp"
#include "problems.hpp"
#include "roots.hpp"
#include "series.hpp"

namespace qbvp {

// Raised when the Pade linear system is singular at this order. The method
// accidentally fails at isolated orders; callers skip and report.
struct degenerate_pade : std::runtime_error {
    degenerate_pade() : std::runtime_error("degenerate Pade approximant at this order") {}
};

struct near_pole : std::runtime_error {
    near_pole() : std::runtime_error("Pade evaluation adjacent to a pole of Q") {}
};

// Rational approximant [p,q] of a truncated series. In the numeric ring
// Q(0) = 1; in the exact ring the pair is fraction-free (Cramer), so P and
// Q are both scaled by the Toeplitz determinant and Q(0) equals it.
template <class R>
struct PadeApprox {
    int p = 0, q = 0;
    std::vector<R> num;  // P, ascending
    std::vector<R> den;  // Q, ascending
    int source_order = 0;
};

namespace detail {

// One attempt at the full [p,q] Toeplitz system; nullopt when singular.
inline std::optional<PadeApprox<Real>> try_pade(const Series<Real>& s, int p, int q) {
    PadeApprox<Real> a;
    a.p = p;
    a.q = q;
    a.source_order = p + q;
    auto c = [&](int n) { return n < 0 ? Real(0) : s[static_cast<size_t>(n)]; };
    a.den.assign(static_cast<size_t>(q) + 1, Real(0));
    a.den[0] = Real(1);
    if (q > 0) {
        Matrix<Real> m(q);
        std::vector<Real> rhs(static_cast<size_t>(q));
        for (int i = 1; i <= q; ++i) {
            for (int j = 1; j <= q; ++j) m.at(i - 1, j - 1) = c(p + i - j);
            rhs[static_cast<size_t>(i - 1)] = -c(p + i);
        }
        std::vector<Real> x;
        try {
            x = solve_linear(m, rhs);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
        for (int j = 1; j <= q; ++j) a.den[static_cast<size_t>(j)] = x[static_cast<size_t>(j - 1)];
    }
    a.num.assign(static_cast<size_t>(p) + 1, Real(0));
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= std::min(i, q); ++j) a.num[static_cast<size_t>(i)].add_mul(a.den[static_cast<size_t>(j)], c(i - j));
    return a;
}

// Does Q * g - P vanish through z^order? This is the defining matching
// property and doubles as the degeneracy detector: a near-singular solve
// produces coefficients that fail it.
inline bool pade_matches(const PadeApprox<Real>& a, const Series<Real>& s, int order) {
    Real cscale(0), qscale(0);
    for (int n = 0; n <= order; ++n) cscale = max(cscale, abs(s[static_cast<size_t>(n)]));
    for (const auto& d : a.den) qscale = max(qscale, abs(d));
    Real tol = pow10(-(Precision::digits() - 14)) * max(cscale * qscale, Real(1));
    for (int n = 0; n <= order; ++n) {
        Real acc(0);
        for (int j = 0; j <= std::min<int>(n, static_cast<int>(a.den.size()) - 1); ++j)
            acc.add_mul(a.den[static_cast<size_t>(j)], s[static_cast<size_t>(n - j)]);
        if (n < static_cast<int>(a.num.size())) acc -= a.num[static_cast<size_t>(n)];
        if (abs(acc) > tol) return false;
    }
    return true;
}

}  // namespace detail

namespace detail {

// Power-of-2 balance factor so the rescaled coefficients stay O(1): the
// Toeplitz system of a geometrically decaying (or growing) series is
// otherwise hopelessly ill scaled.
inline long balance_exponent(const Series<Real>& s) {
    long first = -1, last = -1;
    for (int n = 0; n <= s.order(); ++n)
        if (!s[static_cast<size_t>(n)].is_zero()) { if (first < 0) first = n; last = n; }
    if (first < 0 || last <= first) return 0;
    Real ratio = abs(s[static_cast<size_t>(last)]) / abs(s[static_cast<size_t>(first)]);
    double l2 = mpfr_get_d(log(ratio).raw(), MPFR_RNDN) / std::log(2.0) / static_cast<double>(last - first);
    long e = std::lround(-l2);
    return std::max(-512L, std::min(512L, e));
}

inline Series<Real> scale_pow2(const Series<Real>& s, long e) {
    std::vector<Real> c(s.coeffs());
    for (int n = 0; n <= s.order(); ++n)
        mpfr_mul_2si(c[static_cast<size_t>(n)].raw(), c[static_cast<size_t>(n)].raw(),
                     e * static_cast<long>(n), MPFR_RNDN);
    return Series<Real>(std::move(c), s.var());
}

}  // namespace detail

// Numeric construction: Toeplitz solve with partial pivoting after a
// power-of-2 variable rescale (exact, undone on output), validated by the
// matching property. A failed solve triggers the Pade-table block reduction
// [p-j, q-j]; the reduced pair must still match the series through p+q,
// else the approximant is genuinely ill defined at this order.
inline PadeApprox<Real> pade_build(const Series<Real>& s, int p, int q) {
    if (p + q > s.order()) throw std::invalid_argument("pade_build: p+q exceeds series order");
    const int M = p + q;
    const long e = detail::balance_exponent(s);
    Series<Real> sb = detail::scale_pow2(s, e);
    for (int j = 0; j <= std::min(p, q); ++j) {
        auto a = detail::try_pade(sb, p - j, q - j);
        if (!a) continue;
        if (!detail::pade_matches(*a, sb, M)) continue;
        a->source_order = M;
        // the balanced pair approximates s(2^e xt); back in x each
        // coefficient of degree i picks up 2^{-e i}
        for (size_t i = 0; i < a->num.size(); ++i)
            mpfr_mul_2si(a->num[i].raw(), a->num[i].raw(), -e * static_cast<long>(i), MPFR_RNDN);
        for (size_t i = 0; i < a->den.size(); ++i)
            mpfr_mul_2si(a->den[i].raw(), a->den[i].raw(), -e * static_cast<long>(i), MPFR_RNDN);
        return *a;
    }
    throw degenerate_pade();
}

inline PadeApprox<Real> pade_build(const Series<KPoly>& s, int p, int q, const Real& k) {
    return pade_build(series_at_k(s, k), p, q);
}

namespace detail {

inline std::optional<PadeApprox<KPoly>> try_pade_exact(const Series<KPoly>& s, int p, int q) {
    PadeApprox<KPoly> a;
    a.p = p;
    a.q = q;
    a.source_order = p + q;
    auto c = [&](int n) { return n < 0 ? KPoly() : s[static_cast<size_t>(n)]; };
    if (q == 0) {
        a.den = {KPoly(1)};
    } else {
        Matrix<KPoly> m(q);
        std::vector<KPoly> rhs(static_cast<size_t>(q));
        for (int i = 1; i <= q; ++i) {
            for (int j = 1; j <= q; ++j) m.at(i - 1, j - 1) = c(p + i - j);
            rhs[static_cast<size_t>(i - 1)] = -c(p + i);
        }
        KPoly D = det(m);
        if (D.is_zero()) return std::nullopt;
        a.den.assign(static_cast<size_t>(q) + 1, KPoly());
        a.den[0] = D;
        for (int j = 1; j <= q; ++j) {
            Matrix<KPoly> mj = m;
            for (int i = 0; i < q; ++i) mj.at(i, j - 1) = rhs[static_cast<size_t>(i)];
            a.den[static_cast<size_t>(j)] = det(mj);
        }
    }
    a.num.assign(static_cast<size_t>(p) + 1, KPoly());
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= std::min(i, q); ++j) a.num[static_cast<size_t>(i)] += a.den[static_cast<size_t>(j)] * c(i - j);
    return a;
}

inline bool pade_matches_exact(const PadeApprox<KPoly>& a, const Series<KPoly>& s, int order) {
    for (int n = 0; n <= order; ++n) {
        KPoly acc;
        for (int j = 0; j <= std::min<int>(n, static_cast<int>(a.den.size()) - 1); ++j)
            acc += a.den[static_cast<size_t>(j)] * s[static_cast<size_t>(n - j)];
        if (n < static_cast<int>(a.num.size())) acc -= a.num[static_cast<size_t>(n)];
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace detail

// Exact construction by Cramer with fraction-free determinants; P and Q are
// both scaled by det(T). Block reduction as in the numeric case.
inline PadeApprox<KPoly> pade_build(const Series<KPoly>& s, int p, int q) {
    if (p + q > s.order()) throw std::invalid_argument("pade_build: p+q exceeds series order");
    const int M = p + q;
    for (int j = 0; j <= std::min(p, q); ++j) {
        auto a = detail::try_pade_exact(s, p - j, q - j);
        if (!a) continue;
        if (j > 0 && !detail::pade_matches_exact(*a, s, M)) continue;
        a->source_order = M;
        return *a;
    }
    throw degenerate_pade();
}

namespace detail {
template <class R, class V>
V poly_eval_vec(const std::vector<R>& c, const V& z) {
    V acc(c.back());
    for (size_t i = c.size() - 1; i-- > 0;) acc = acc * z + V(c[i]);
    return acc;
}
}  // namespace detail

// P(z)/Q(z) with a scale-aware guard against evaluating next to a pole.
inline Real pade_eval(const PadeApprox<Real>& a, const Real& z) {
    Real qn = detail::poly_eval_vec(a.den, z);
    Real qnorm(0);
    for (const auto& x : a.den) qnorm = max(qnorm, abs(x));
    if (abs(qn) < pow10(-(Precision::digits() / 2)) * qnorm) throw near_pole();
    return detail::poly_eval_vec(a.num, z) / qn;
}

inline Complex pade_eval(const PadeApprox<Real>& a, const Complex& z) {
    std::vector<Complex> num(a.num.begin(), a.num.end()), den(a.den.begin(), a.den.end());
    Complex qn = detail::poly_eval_vec(den, z);
    Real qnorm(0);
    for (const auto& x : a.den) qnorm = max(qnorm, abs(x));
    if (abs(qn) < pow10(-(Precision::digits() / 2)) * qnorm) throw near_pole();
    return detail::poly_eval_vec(num, z) / qn;
}

// Zeros of the denominator (candidate singular points of the function).
inline std::vector<Complex> pade_poles(const PadeApprox<Real>& a) {
    if (a.q == 0) return {};
    return complex_poly_roots(a.den);
}

// Zeros of the numerator (for Froissart pairing).
inline std::vector<Complex> pade_zeros(const PadeApprox<Real>& a) {
    if (a.p == 0) return {};
    Real nnorm(0);
    for (const auto& x : a.num) nnorm = max(nnorm, abs(x));
    if (nnorm.is_zero()) return {};
    return complex_poly_roots(a.num);
}

// Diagonal approximant limit at infinity: ratio of leading coefficients.
inline Real pade_value_at_infinity(const PadeApprox<Real>& a) {
    if (a.p != a.q) throw std::invalid_argument("pade_value_at_infinity: needs a diagonal approximant");
    Real qnorm(0);
    for (const auto& x : a.den) qnorm = max(qnorm, abs(x));
    const Real& lead_q = a.den[static_cast<size_t>(a.q)];
    if (abs(lead_q) <= pow10(-(Precision::digits() - 12)) * qnorm)
        throw degenerate_pade();  // limit undefined at this order
    return a.num[static_cast<size_t>(a.p)] / lead_q;
}

// ---------------------------------------------------------------------------
// Conditions.

// Explicit Pade condition P(span)/Q(span) = B; with span at infinity the
// diagonal leading-coefficient ratio replaces the evaluation. Exact form:
// P(span) - B Q(span), a polynomial in k.
inline ConditionFn pade_explicit_condition(const Problem& p, int M, int omega = 0) {
    ConditionFn cond;
    cond.method = "pade-explicit";
    cond.problem = p.name;
    cond.order = M;
    int q = (M - omega) / 2;
    int pp = q + omega;
    if (q < 1) throw std::invalid_argument("pade_explicit_condition: order too small");
    const Problem prob = p;
    Real B = p.B.to_real();
    if (p.span_finite) {
        Real span = p.span.to_real();
        cond.numeric = [prob, pp, q, span, B](const Real& k) {
            auto s = expand_numeric(prob, pp + q, k);
            auto a = pade_build(s, pp, q);
            Real qn = detail::poly_eval_vec(a.den, span);
            return detail::poly_eval_vec(a.num, span) - B * qn;
        };
    } else {
        if (pp != q) throw method_mismatch("pade-explicit at infinity requires a diagonal approximant");
        int bd = p.boundary_deriv;
        cond.numeric = [prob, pp, q, B, bd](const Real& k) {
            auto s = expand_numeric(prob, pp + q + bd, k);
            for (int d = 0; d < bd; ++d) s = series_diff(s);
            auto a = pade_build(s, pp, q);
            return pade_value_at_infinity(a) - B;
        };
    }
    return cond;
}

inline ConditionFn pade_explicit_condition(const Series<KPoly>& s, int p, int q,
                                           const SurdValue& span, const SurdValue& B) {
    ConditionFn cond;
    cond.method = "pade-explicit";
    cond.order = p + q;
    auto a = pade_build(s, p, q);
    if (span.is_rational() && B.is_rational()) {
        KPoly sum;
        Rational zp(1);
        KPoly qsum;
        for (size_t i = 0; i < a.num.size(); ++i) { sum += a.num[i].scaled(zp); zp *= span.a; }
        zp = Rational(1);
        for (size_t i = 0; i < a.den.size(); ++i) { qsum += a.den[i].scaled(zp); zp *= span.a; }
        cond.exact = sum - qsum.scaled(B.a);
        KPoly ex = *cond.exact;
        cond.degenerate = ex.is_zero();
        cond.numeric = [ex](const Real& k) { return ex.eval(k); };
        return cond;
    }
    Real sp = span.to_real(), b = B.to_real();
    auto ap = std::make_shared<PadeApprox<KPoly>>(a);
    cond.numeric = [ap, sp, b](const Real& k) {
        Real qn(0), pn(0), zp(1);
        for (size_t i = 0; i < ap->num.size() || i < ap->den.size(); ++i) {
            if (i < ap->num.size()) pn.add_mul(ap->num[i].eval(k), zp);
            if (i < ap->den.size()) qn.add_mul(ap->den[i].eval(k), zp);
            zp *= sp;
        }
        return pn - b * qn;
    };
    return cond;
}

// ---------------------------------------------------------------------------
// Pade-Hankel ("minimal") condition: det of the Toeplitz matrix
// T_{i,j} = c_{q+omega+1+i-j}, i,j = 0..q, must vanish.

struct HankelSpec {
    int q = 0;
    int omega = 0;  // p - q; sub-diagonal bases work equally well
};

// Matrix dimension (q+1); needs coefficients up to 2q+omega+1.
inline ConditionFn hankel_condition(const Series<KPoly>& s, const HankelSpec& spec) {
    if (2 * spec.q + spec.omega + 1 > s.order())
        throw std::invalid_argument("hankel_condition: series order too small for this q");
    Matrix<KPoly> m(spec.q + 1);
    for (int i = 0; i <= spec.q; ++i)
        for (int j = 0; j <= spec.q; ++j) m.at(i, j) = s[static_cast<size_t>(spec.q + spec.omega + 1 + i - j)];
    ConditionFn cond;
    cond.method = "pade-hankel";
    cond.order = 2 * spec.q + spec.omega;
    KPoly d = det(m);
    cond.exact = d;
    cond.degenerate = d.is_zero();
    cond.numeric = [d](const Real& k) { return d.eval(k); };
    return cond;
}

inline ConditionFn hankel_condition(const Problem& p, int M, const HankelSpec& spec) {
    ConditionFn cond;
    cond.method = "pade-hankel";
    cond.problem = p.name;
    cond.order = 2 * spec.q + spec.omega;
    const Problem prob = p;
    const HankelSpec sp = spec;
    (void)M;
    cond.numeric = [prob, sp](const Real& k) {
        auto s = expand_numeric(prob, 2 * sp.q + sp.omega + 1, k);
        Matrix<Real> m(sp.q + 1);
        for (int i = 0; i <= sp.q; ++i)
            for (int j = 0; j <= sp.q; ++j) m.at(i, j) = s[static_cast<size_t>(sp.q + sp.omega + 1 + i - j)];
        return det(m);
    };
    return cond;
}

// Movable-pole variant: the last row becomes (1, z0, ..., z0^q), forcing
// Q(z0) = 0; z0 -> infinity reduces to the (q-1, omega+1) Toeplitz minor.
inline ConditionFn hankel_condition_with_pole(const Series<KPoly>& s, const HankelSpec& spec, const Rational& z0) {
    if (2 * spec.q + spec.omega + 1 > s.order())
        throw std::invalid_argument("hankel_condition_with_pole: series order too small");
    Matrix<KPoly> m(spec.q + 1);
    for (int i = 0; i < spec.q; ++i)
        for (int j = 0; j <= spec.q; ++j) m.at(i, j) = s[static_cast<size_t>(spec.q + spec.omega + 1 + i - j)];
    Rational zp(1);
    for (int j = 0; j <= spec.q; ++j) { m.at(spec.q, j) = KPoly(zp); zp *= z0; }
    ConditionFn cond;
    cond.method = "pade-hankel-pole";
    cond.order = 2 * spec.q + spec.omega;
    KPoly d = det(m);
    cond.exact = d;
    cond.degenerate = d.is_zero();
    cond.numeric = [d](const Real& k) { return d.eval(k); };
    return cond;
}

inline ConditionFn hankel_condition_with_pole(const Problem& p, const HankelSpec& spec, const Real& z0) {
    ConditionFn cond;
    cond.method = "pade-hankel-pole";
    cond.problem = p.name;
    cond.order = 2 * spec.q + spec.omega;
    const Problem prob = p;
    const HankelSpec sp = spec;
    Real z0c = z0;
    cond.numeric = [prob, sp, z0c](const Real& k) {
        auto s = expand_numeric(prob, 2 * sp.q + sp.omega + 1, k);
        Matrix<Real> m(sp.q + 1);
        for (int i = 0; i < sp.q; ++i)
            for (int j = 0; j <= sp.q; ++j) m.at(i, j) = s[static_cast<size_t>(sp.q + sp.omega + 1 + i - j)];
        Real zp(1);
        for (int j = 0; j <= sp.q; ++j) { m.at(sp.q, j) = zp; zp *= z0c; }
        return det(m);
    };
    return cond;
}

}  // namespace qbvp

#endif
