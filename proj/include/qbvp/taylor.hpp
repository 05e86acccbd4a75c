#ifndef QBVP_TAYLOR_HPP
#define QBVP_TAYLOR_HPP

#include <memory>

#include "condition.hpp"
#include "problems.hpp"
#include "series.hpp"

namespace qbvp {

// Partial sums of a truncated series (Horner at the context precision).
inline Real partial_sum(const Series<Real>& s, const Real& z) { return series_eval(s, z); }
inline Complex partial_sum(const Series<Real>& s, const Complex& z) { return series_eval(s, z); }
inline Real partial_sum(const Series<KPoly>& s, const Real& z, const Real& k) { return series_eval_at(s, z, k); }

// Explicit Taylor condition: sum of the truncated series at the second
// boundary minus B. Only defined for a finite span; at an infinite boundary
// the partial sum diverges and one of the continuation methods applies.
inline ConditionFn taylor_explicit_condition(const Series<KPoly>& series, const SurdValue& span,
                                             const SurdValue& B, bool span_finite = true) {
    if (!span_finite) throw method_mismatch("taylor-explicit: infinite span; use the Pade or mapping method");
    ConditionFn cond;
    cond.method = "taylor-explicit";
    cond.order = series.order();
    if (span.is_rational()) {
        // partial sum collapses to a single polynomial in k
        KPoly sum;
        Rational sp = span.a;
        Rational zp(1);
        for (int n = 0; n <= series.order(); ++n) {
            sum += series[static_cast<size_t>(n)].scaled(zp);
            zp *= sp;
        }
        if (B.is_rational()) {
            cond.exact = sum - KPoly(B.a);
            KPoly ex = *cond.exact;
            cond.degenerate = ex.is_zero();
            cond.numeric = [ex](const Real& k) { return ex.eval(k); };
        } else {
            Real b = B.to_real();
            cond.numeric = [sum, b](const Real& k) { return sum.eval(k) - b; };
            cond.degenerate = sum.is_zero() && b.is_zero();
        }
    } else {
        auto s = std::make_shared<Series<KPoly>>(series);
        Real sp = span.to_real(), b = B.to_real();
        cond.numeric = [s, sp, b](const Real& k) { return series_eval_at(*s, sp, k) - b; };
    }
    return cond;
}

inline ConditionFn taylor_explicit_condition(const Series<Real>& series, const Real& span, const Real& B) {
    ConditionFn cond;
    cond.method = "taylor-explicit";
    cond.order = series.order();
    Real value = series_eval(series, span) - B;
    cond.numeric = [value](const Real&) { return value; };
    return cond;
}

// Numeric-sampling variant: rebuilds the series at each sampled k.
inline ConditionFn taylor_explicit_condition(const Problem& p, int M) {
    if (!p.span_finite) throw method_mismatch("taylor-explicit: infinite span; use the Pade or mapping method");
    ConditionFn cond;
    cond.method = "taylor-explicit";
    cond.problem = p.name;
    cond.order = M;
    Real span = p.span.to_real(), B = p.B.to_real();
    const Problem prob = p;
    cond.numeric = [prob, M, span, B](const Real& k) {
        return series_eval(expand_numeric(prob, M, k), span) - B;
    };
    return cond;
}

// "Minimal"/simplistic condition: the next Taylor coefficient vanishes.
// Takes the series at order M+1 and conditions on its last coefficient.
inline ConditionFn simplistic_condition(const Series<KPoly>& series_M_plus_1) {
    ConditionFn cond;
    cond.method = "simplistic";
    cond.order = series_M_plus_1.order() - 1;
    KPoly c = series_M_plus_1[static_cast<size_t>(series_M_plus_1.order())];
    cond.exact = c;
    cond.degenerate = c.is_zero();
    cond.numeric = [c](const Real& k) { return c.eval(k); };
    return cond;
}

inline ConditionFn simplistic_condition(const Problem& p, int M) {
    ConditionFn cond;
    cond.method = "simplistic";
    cond.problem = p.name;
    cond.order = M;
    if (p.exact_ring_supported) {
        cond = simplistic_condition(expand_exact(p, M + 1));
        cond.problem = p.name;
        return cond;
    }
    const Problem prob = p;
    cond.numeric = [prob, M](const Real& k) {
        auto s = expand_numeric(prob, M + 1, k);
        return s[static_cast<size_t>(M + 1)];
    };
    return cond;
}

}  // namespace qbvp

#endif
