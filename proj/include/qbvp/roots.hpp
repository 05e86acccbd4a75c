#ifndef QBVP_ROOTS_HPP
#define QBVP_ROOTS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "complex.hpp"
#include "poly.hpp"

namespace qbvp {

struct RealRoot {
    Real value;
    int multiplicity = 1;
};

// Signalled when a bracket endpoint is itself a zero of the polynomial;
// the caller should resize the bracket and retry.
struct bracket_endpoint_root : std::runtime_error {
    bracket_endpoint_root() : std::runtime_error("bracket endpoint is a root; resize and retry") {}
};

namespace detail {

// Sturm chain of a squarefree polynomial, primitive-normalized to slow
// coefficient growth.
inline std::vector<KPoly> sturm_chain(const KPoly& f) {
    std::vector<KPoly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        KPoly r = chain[chain.size() - 2].rem(chain.back());
        if (r.is_zero()) break;
        Rational c = r.content();
        chain.push_back((-r).scaled(Rational(1) / c));
    }
    return chain;
}

inline int sign_variations(const std::vector<KPoly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Count of distinct real roots in (a, b] for squarefree f.
inline int sturm_count(const std::vector<KPoly>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// Newton refinement with bisection fallback inside a sign-bracketing
// interval [lo, hi].
inline Real polish_root(const KPoly& f, Real lo, Real hi) {
    KPoly df = f.derivative();
    Real flo = f.eval(lo);
    if (flo.is_zero()) return lo;
    Real x = (lo + hi) / Real(2);
    Real tol = pow10(-(Precision::digits() - 4)) * max(abs(lo), abs(hi));
    for (int it = 0; it < 4 * Precision::digits(); ++it) {
        Real fx = f.eval(x);
        if (fx.is_zero()) return x;
        Real dfx = df.eval(x);
        bool ok = false;
        if (!dfx.is_zero()) {
            Real nx = x - fx / dfx;
            if (nx > lo && nx < hi) {
                if (abs(nx - x) < tol) return nx;
                x = nx;
                ok = true;
            }
        }
        if (!ok) {
            if ((fx.sign() > 0) == (flo.sign() > 0)) lo = x; else hi = x;
            x = (lo + hi) / Real(2);
            if (hi - lo < tol) return x;
        }
    }
    return x;
}

// Yun squarefree decomposition: returns (factor, multiplicity) pairs.
inline std::vector<std::pair<KPoly, int>> squarefree_decomposition(const KPoly& p) {
    std::vector<std::pair<KPoly, int>> out;
    KPoly a = p.primitive();
    if (a.degree() < 1) return out;
    KPoly g = gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    KPoly b = a.div_exact(g);
    KPoly c = a.derivative().div_exact(g);
    KPoly d = c - b.derivative();
    int m = 1;
    while (b.degree() > 0) {
        KPoly f = gcd(b, d);
        if (f.degree() >= 1) out.emplace_back(f, m);
        b = b.div_exact(f);
        c = d.div_exact(f);
        d = c - b.derivative();
        ++m;
    }
    return out;
}

}  // namespace detail

// All real roots of p in the open bracket (lo, hi), isolated by Sturm
// counts, bisected and Newton-polished; multiplicities from the squarefree
// decomposition. Throws bracket_endpoint_root if an endpoint is a root.
inline std::vector<RealRoot> poly_real_roots(const KPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::domain_error("poly_real_roots: zero polynomial");
    if (lo >= hi) throw std::invalid_argument("poly_real_roots: empty bracket");
    if (p.eval(lo).is_zero() || p.eval(hi).is_zero()) throw bracket_endpoint_root();
    std::vector<RealRoot> roots;
    if (p.degree() < 1) return roots;

    for (const auto& [f, mult] : detail::squarefree_decomposition(p)) {
        if (f.degree() < 1) continue;
        if (f.eval(lo).is_zero() || f.eval(hi).is_zero()) throw bracket_endpoint_root();
        auto chain = detail::sturm_chain(f);
        // isolate: stack of intervals with their root counts
        std::vector<std::pair<Rational, Rational>> work{{lo, hi}};
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            int n = detail::sturm_count(chain, a, b);
            if (n == 0) continue;
            // midpoint must not be a root itself; nudge it if it is
            Rational mid = (a + b) / Rational(2);
            static const long denoms[] = {3, 5, 7, 11, 13};
            for (int t = 0; t < 5 && f.eval(mid).is_zero(); ++t)
                mid = a + (b - a) / Rational(denoms[t]);
            if (f.eval(mid).is_zero()) {
                // six distinct root hits in one interval: record and shave
                roots.push_back({mid.to_real(), mult});
                Rational eps = (b - a) / Rational(1000000);
                work.emplace_back(a, mid - eps);
                work.emplace_back(mid + eps, b);
                continue;
            }
            if (n == 1) {
                // one root in (a,b]; find the sign-bracketing half
                if (detail::sturm_count(chain, a, mid) == 1)
                    roots.push_back({detail::polish_root(f, a.to_real(), mid.to_real()), mult});
                else
                    roots.push_back({detail::polish_root(f, mid.to_real(), b.to_real()), mult});
                continue;
            }
            work.emplace_back(a, mid);
            work.emplace_back(mid, b);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    return roots;
}

// ---------------------------------------------------------------------------
// Complex roots (Aberth-Ehrlich), used for Pade denominators and numerators.

inline std::vector<Complex> complex_poly_roots(std::vector<Complex> c) {
    // strip leading (high-order) zeros
    Real tiny = pow10(-(Precision::digits() + 10));
    Real scale(0);
    for (const auto& x : c) scale = max(scale, abs(x));
    if (scale.is_zero()) throw std::domain_error("complex_poly_roots: zero polynomial");
    while (c.size() > 1 && abs(c.back()) < tiny * scale) c.pop_back();
    std::vector<Complex> roots;
    // roots at the origin
    size_t low = 0;
    while (low < c.size() - 1 && abs(c[low]) < tiny * scale) ++low;
    for (size_t i = 0; i < low; ++i) roots.emplace_back(Real(0), Real(0));
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
    int n = static_cast<int>(c.size()) - 1;
    if (n <= 0) return roots;
    if (n == 1) {
        roots.push_back(-(c[0] / c[1]));
        return roots;
    }
    if (n == 2) {
        Complex a = c[2], b = c[1], cc = c[0];
        Complex disc = sqrt(b * b - Complex(Real(4)) * a * cc);
        // pick the larger-magnitude branch for stability
        Complex q = (abs(b + disc) > abs(b - disc)) ? (b + disc) : (b - disc);
        q = -(q / Complex(Real(2)));
        roots.push_back(q / a);
        roots.push_back(cc / q);
        return roots;
    }

    // initial guesses on a circle, slightly detuned in angle
    Real r0(0);
    for (int i = 0; i < n; ++i) {
        Real t = pow(abs(c[i]) / abs(c[n]), Real(1) / Real(n - i));
        r0 = max(r0, t);
    }
    if (r0.is_zero()) r0 = Real(1);
    std::vector<Complex> z(n);
    Real two_pi = Real(2) * pi();
    for (int i = 0; i < n; ++i) {
        Real ang = two_pi * Real(i) / Real(n) + Real("0.3779");
        z[i] = Complex(r0 * cos(ang), r0 * sin(ang));
    }

    std::vector<Complex> dc(n);
    for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * Complex(Real(i));

    auto eval = [](const std::vector<Complex>& p, const Complex& x) {
        Complex acc(Real(0));
        for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
        return acc;
    };

    Real eps = pow10(-(Precision::digits() - 6));
    for (int iter = 0; iter < 600; ++iter) {
        Real worst(0);
        for (int i = 0; i < n; ++i) {
            Complex pv = eval(c, z[i]);
            Complex dv = eval(dc, z[i]);
            if (dv.is_zero()) { z[i] += Complex(eps, eps); continue; }
            Complex w = pv / dv;
            Complex s(Real(0));
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                s += Complex(Real(1)) / (z[i] - z[j]);
            }
            Complex denom = Complex(Real(1)) - w * s;
            Complex corr = denom.is_zero() ? w : w / denom;
            z[i] -= corr;
            worst = max(worst, abs(corr) / (Real(1) + abs(z[i])));
        }
        if (worst < eps) break;
    }
    for (auto& zi : z) roots.push_back(zi);
    return roots;
}

inline std::vector<Complex> complex_poly_roots(const std::vector<Real>& c) {
    std::vector<Complex> cc;
    cc.reserve(c.size());
    for (const auto& x : c) cc.emplace_back(x, Real(0));
    return complex_poly_roots(std::move(cc));
}

// ---------------------------------------------------------------------------
// Scalar root finding on a callable condition (numeric mode of the solver).

using RealFn = std::function<Real(const Real&)>;

// Refine a sign-change bracket [lo,hi] (f(lo), f(hi) of opposite signs) by
// bisection plus secant acceleration.
inline Real refine_bracketed_root(const RealFn& f, Real lo, Real hi, const Real& tol) {
    Real flo = f(lo), fhi = f(hi);
    if (flo.is_zero()) return lo;
    if (fhi.is_zero()) return hi;
    if ((flo.sign() > 0) == (fhi.sign() > 0))
        throw std::invalid_argument("refine_bracketed_root: endpoints do not bracket");
    for (int it = 0; it < 8 * Precision::digits(); ++it) {
        // secant proposal clipped into the bracket; every other step is a
        // plain bisection so one-sided stagnation cannot pin the width
        Real nx;
        if (it % 2 == 0 && !(fhi - flo).is_zero()) {
            nx = (lo * fhi - hi * flo) / (fhi - flo);
            if (!(nx > lo && nx < hi)) nx = (lo + hi) / Real(2);
        } else {
            nx = (lo + hi) / Real(2);
        }
        Real fnx = f(nx);
        if (fnx.is_zero()) return nx;
        if ((fnx.sign() > 0) == (flo.sign() > 0)) { lo = nx; flo = fnx; }
        else { hi = nx; fhi = fnx; }
        if (hi - lo < tol) return (lo + hi) / Real(2);
    }
    return (lo + hi) / Real(2);
}

struct ScanRoot {
    Real value;
    Real bracket_width;
};

// Scan [lo,hi] at the given resolution and refine every sign change.
inline std::vector<ScanRoot> scan_roots(const RealFn& f, const Real& lo, const Real& hi,
                                        const Real& resolution, const Real& tol) {
    std::vector<ScanRoot> out;
    Real x = lo, fx = f(x);
    while (x < hi) {
        Real nx = min(x + resolution, hi);
        Real fnx = f(nx);
        if (fx.is_zero()) {
            out.push_back({x, Real(0)});
        } else if (!fnx.is_zero() && (fx.sign() > 0) != (fnx.sign() > 0)) {
            out.push_back({refine_bracketed_root(f, x, nx, tol), nx - x});
        }
        x = nx;
        fx = fnx;
    }
    if (fx.is_zero()) out.push_back({x, Real(0)});
    return out;
}

}  // namespace qbvp

#endif
