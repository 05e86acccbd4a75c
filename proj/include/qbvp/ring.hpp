#ifndef QBVP_RING_HPP
#define QBVP_RING_HPP

#include "complex.hpp"
#include "rational.hpp"
#include "real.hpp"

namespace qbvp {

// Coefficient-ring glue used by the series / determinant / Pade templates.
// A ring provides exact construction from rationals; `exact` tells whether
// equality tests are meaningful (Rational, KPoly) or tolerance-based
// (Real, Complex).
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from(const Rational& q) { return q; }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
};

template <>
struct ring_traits<Real> {
    static constexpr bool exact = false;
    static Real zero() { return Real(0); }
    static Real one() { return Real(1); }
    static Real from(const Rational& q) { return q.to_real(); }
    static bool is_zero(const Real& x) { return x.is_zero(); }
};

template <>
struct ring_traits<Complex> {
    static constexpr bool exact = false;
    static Complex zero() { return Complex(0); }
    static Complex one() { return Complex(1); }
    static Complex from(const Rational& q) { return Complex(q.to_real()); }
    static bool is_zero(const Complex& x) { return x.is_zero(); }
};

}  // namespace qbvp

#endif
