#ifndef QBVP_MAPPING_HPP
#define QBVP_MAPPING_HPP

#include <memory>

#include "condition.hpp"
#include "problems.hpp"
#include "series.hpp"

namespace qbvp {

// Angular-sector conformal map: vertex at -R on the negative real axis,
// half-angle alpha*pi/2; the sector interior maps onto the unit disc with
// z=0 -> w=0 and z=+infinity -> w=1.
struct SectorMap {
    Real R;
    Real alpha;

    SectorMap(Real R_, Real alpha_) : R(std::move(R_)), alpha(std::move(alpha_)) {
        if (!(R > Real(0)) || !(alpha > Real(0)))
            throw std::invalid_argument("SectorMap: R and alpha must be positive");
    }
};

// w = ((1+z/R)^{1/alpha} - 1) / ((1+z/R)^{1/alpha} + 1), principal branch.
inline Complex map_forward(const Complex& z, const SectorMap& m) {
    Complex base = Complex(Real(1)) + z / Complex(m.R);
    if (abs(base) < pow10(-(Precision::digits() - 6)))
        throw std::domain_error("map_forward: branch point at the sector vertex z = -R");
    Complex t = pow(base, Real(1) / m.alpha);
    return (t - Complex(Real(1))) / (t + Complex(Real(1)));
}

// z = R [((1+w)/(1-w))^alpha - 1], principal branch; w = 1 is the image of
// the infinite boundary and has no finite preimage.
inline Complex map_inverse(const Complex& w, const SectorMap& m) {
    Complex one(Real(1));
    if (abs(w - one) < pow10(-(Precision::digits() - 6)))
        throw std::domain_error("map_inverse: w = 1 corresponds to z = +infinity");
    Complex t = pow((one + w) / (one - w), m.alpha);
    return Complex(m.R) * (t - one);
}

// Series of z(w) about w = 0 (zero constant term): R[(1+w)^a (1-w)^{-a} - 1].
template <class R>
Series<R> map_inner_series(const R& radius, const R& alpha, int M, const std::string& var = "w") {
    auto plus = binomial_series<R>(alpha, M, var);
    auto minus = binomial_series<R>(-alpha, M, var);
    // (1-w)^{-alpha}: alternate signs of (1+x)^{-alpha}
    std::vector<R> mc(minus.coeffs());
    for (size_t i = 1; i < mc.size(); i += 2) mc[i] = -mc[i];
    auto prod = series_mul(plus, Series<R>(std::move(mc), var));
    prod[0] = prod[0] - ring_traits<R>::one();
    return series_scale(prod, radius);
}

// Precomputed powers of the inner series: recomposition of any z-series
// under the same (R, alpha, M) is then a coefficient-space linear map.
template <class R>
class MapKernel {
public:
    MapKernel(const R& radius, const R& alpha, int M, std::string var = "w") : M_(M) {
        Series<R> inner = map_inner_series<R>(radius, alpha, M, var);
        powers_.reserve(static_cast<size_t>(M) + 1);
        powers_.push_back(Series<R>::constant(ring_traits<R>::one(), M, var));
        for (int n = 1; n <= M; ++n) powers_.push_back(series_mul(powers_.back(), inner));
    }

    int order() const { return M_; }

    // u_i depends only on c_0..c_i, so lower-order truncations are prefixes.
    Series<R> apply(const Series<R>& series_in_z) const {
        int m = std::min(M_, series_in_z.order());
        std::vector<R> u(static_cast<size_t>(m) + 1, ring_traits<R>::zero());
        for (int n = 0; n <= m; ++n) {
            const R& cn = series_in_z[static_cast<size_t>(n)];
            if (ring_traits<R>::is_zero(cn)) continue;
            const auto& pw = powers_[static_cast<size_t>(n)];
            for (int i = n; i <= m; ++i) u[static_cast<size_t>(i)].add_mul(cn, pw[static_cast<size_t>(i)]);
        }
        return Series<R>(std::move(u), powers_[0].var());
    }

private:
    int M_;
    std::vector<Series<R>> powers_;
};

// One-shot recomposition of a z-series into the mapped variable w.
template <class R>
Series<R> recompose(const Series<R>& series_in_z, const R& radius, const R& alpha) {
    MapKernel<R> kernel(radius, alpha, series_in_z.order());
    return kernel.apply(series_in_z);
}

inline Series<Real> recompose(const Series<Real>& series_in_z, const SectorMap& m) {
    return recompose<Real>(series_in_z, m.R, m.alpha);
}

// Explicit mapping condition: the mapped sum at w = 1 equals B.
inline ConditionFn map_explicit_condition(const Series<KPoly>& series_w, const SurdValue& B) {
    ConditionFn cond;
    cond.method = "map-explicit";
    cond.order = series_w.order();
    KPoly sum;
    for (int i = 0; i <= series_w.order(); ++i) sum += series_w[static_cast<size_t>(i)];
    if (B.is_rational()) {
        cond.exact = sum - KPoly(B.a);
        KPoly ex = *cond.exact;
        cond.degenerate = ex.is_zero();
        cond.numeric = [ex](const Real& k) { return ex.eval(k); };
    } else {
        Real b = B.to_real();
        cond.numeric = [sum, b](const Real& k) { return sum.eval(k) - b; };
    }
    return cond;
}

// "Minimal" mapping condition: the last mapped coefficient vanishes.
inline ConditionFn map_minimal_condition(const Series<KPoly>& series_w) {
    ConditionFn cond;
    cond.method = "map-minimal";
    cond.order = series_w.order();
    KPoly u_M = series_w[static_cast<size_t>(series_w.order())];
    cond.exact = u_M;
    cond.degenerate = u_M.is_zero();
    cond.numeric = [u_M](const Real& k) { return u_M.eval(k); };
    return cond;
}

namespace detail {

// Shared kernel-backed evaluator for the numeric mapping conditions: the
// kernel is built once per (R, alpha, M); per-k work is O(M^2).
struct MapConditionCore {
    Problem problem;
    std::shared_ptr<MapKernel<Real>> kernel;
    int M;

    Series<Real> mapped(const Real& k) const {
        auto s = expand_numeric(problem, M + problem.boundary_deriv, k);
        for (int d = 0; d < problem.boundary_deriv; ++d) s = series_diff(s);
        return kernel->apply(s.truncated(M));
    }
};

}  // namespace detail

inline ConditionFn map_explicit_condition(const Problem& p, int M, const SectorMap& m,
                                          std::shared_ptr<MapKernel<Real>> kernel = nullptr) {
    if (!kernel) kernel = std::make_shared<MapKernel<Real>>(m.R, m.alpha, M);
    detail::MapConditionCore core{p, kernel, M};
    ConditionFn cond;
    cond.method = "map-explicit";
    cond.problem = p.name;
    cond.order = M;
    Real B = p.B.to_real();
    cond.numeric = [core, B](const Real& k) {
        auto u = core.mapped(k);
        Real sum(0);
        for (int i = 0; i <= u.order(); ++i) sum += u[static_cast<size_t>(i)];
        return sum - B;
    };
    return cond;
}

inline ConditionFn map_minimal_condition(const Problem& p, int M, const SectorMap& m,
                                         std::shared_ptr<MapKernel<Real>> kernel = nullptr) {
    if (!kernel) kernel = std::make_shared<MapKernel<Real>>(m.R, m.alpha, M);
    detail::MapConditionCore core{p, kernel, M};
    ConditionFn cond;
    cond.method = "map-minimal";
    cond.problem = p.name;
    cond.order = M;
    cond.numeric = [core](const Real& k) {
        auto u = core.mapped(k);
        return u[static_cast<size_t>(u.order())];
    };
    return cond;
}

// Sector parameters from the singularity closest to the origin: R = |z_s|
// and alpha from the vertex angle subtended at -R. The two-argument angle
// form extends the arcsin formula to obtuse vertex angles; a singularity on
// the negative real axis at the vertex leaves the full cut plane, alpha = 2.
inline SectorMap sector_from_singularity(const Complex& z_s) {
    Real R = abs(z_s);
    if (R.is_zero()) throw std::domain_error("sector_from_singularity: singularity at the origin");
    Real shifted_re = z_s.re + R;
    Real y = abs(z_s.im);
    if (y < pow10(-(Precision::digits() - 8)) * R && shifted_re <= pow10(-(Precision::digits() - 8)) * R) {
        return SectorMap(R, Real(2));
    }
    Real phi = atan2(y, shifted_re);
    return SectorMap(R, Real(2) * phi / pi());
}

}  // namespace qbvp

#endif
