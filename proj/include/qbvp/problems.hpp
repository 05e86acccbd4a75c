#ifndef QBVP_PROBLEMS_HPP
#define QBVP_PROBLEMS_HPP

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "series.hpp"

namespace qbvp {

// One monomial of an ODE written in division-free polynomial form:
//   coef * z^zpow * prod_j g^(derivs[j]).
// These term lists drive the residual checker and the local-expansion
// machinery; they are independent of the hand-derived recurrences below,
// which is what makes residual_check a genuine cross-check.
struct OdeTerm {
    Rational coef;
    int zpow = 0;
    std::vector<int> derivs;
};

// a + b*sqrt(c): covers every boundary constant in the registry
// (1, 0, sqrt(3/10), ...) without committing to a numeric precision early.
struct SurdValue {
    Rational a, b, c;

    SurdValue() = default;
    SurdValue(Rational a_) : a(std::move(a_)) {}
    SurdValue(Rational a_, Rational b_, Rational c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    bool is_rational() const { return b.is_zero() || c.is_zero(); }
    Real to_real() const { return a.to_real() + b.to_real() * qbvp::sqrt(c.to_real()); }
};

struct unsupported_ring : std::runtime_error {
    explicit unsupported_ring(const std::string& what) : std::runtime_error(what) {}
};

// An ODE boundary-value problem: recurrence, boundary data, parameter
// roles and back-transformations. Immutable after construction.
struct Problem {
    std::string name;
    std::string var = "z";
    std::map<std::string, Rational> params;

    bool exact_ring_supported = true;
    int ode_order = 2;
    int recurrence_shift = 0;  // ODE row z^n pins coefficient c_{n+shift}
    std::vector<OdeTerm> ode_terms;
    std::vector<OdeTerm> ode_terms_infinity;  // in y = 1/z; empty if out of scope

    int connection_deriv = 0;   // which derivative at the origin is unknown
    std::string connection_symbol = "k";
    bool span_finite = false;
    SurdValue span;             // second-boundary location when finite
    int boundary_deriv = 0;     // 0: g(b) = B, 1: g'(b) = B
    SurdValue B;

    std::vector<Rational> trivial_roots;  // excluded trivial-solution limits
    Rational bracket_lo = Rational(-10), bracket_hi = Rational(10);

    std::function<Series<KPoly>(int)> expand_exact_fn;
    std::function<Series<Real>(int, const Real&)> expand_numeric_fn;
    std::function<std::map<std::string, Real>(const Real&)> to_original_fn;
};

// ---------------------------------------------------------------------------
// Recurrences, one per problem, templated over the coefficient ring so the
// exact (KPoly) and numeric (Real at fixed k) expansions share one code path.

namespace recurrences {

template <class R>
R int_ratio(long num, long den) { return ring_traits<R>::from(Rational(num, den)); }

// 4 z g'' - 4 z g g' - 2 g^2 + (6 - z) g' + 2 g = 0, c0 = k.
// Row z^n: (n+1)(4n+6) c_{n+1} = (n-2) c_n + sum_i [2 + 4(n-i) if i<n] c_i c_{n-i}.
template <class R>
Series<R> polchinski(int M, const R& k) {
    std::vector<R> c(static_cast<size_t>(M) + 1, ring_traits<R>::zero());
    c[0] = k;
    for (int n = 0; n < M; ++n) {
        R rhs = c[n] * int_ratio<R>(n - 2, 1);
        for (int i = 0; i <= n; ++i) {
            long w = 2 + (i < n ? 4L * (n - i) : 0);
            R t = c[i] * c[n - i];
            rhs.add_mul(t, int_ratio<R>(w, 1));
        }
        c[n + 1] = rhs * int_ratio<R>(1, static_cast<long>(n + 1) * (4L * n + 6));
    }
    return Series<R>(std::move(c), "z");
}

// z (g g')' - g g' - 2 z^2 g^3 = 0, c0 = 1, c1 = 0, c2 = k/2.
// Row z^n (n >= 2): (n-1) s_n = 2 u_{n-2}, s = coeffs of g g', u = of g^3.
template <class R>
Series<R> thomas_fermi(int M, const R& k) {
    std::vector<R> c(static_cast<size_t>(M) + 1, ring_traits<R>::zero());
    c[0] = ring_traits<R>::one();
    if (M >= 2) c[2] = k * int_ratio<R>(1, 2);
    std::vector<R> g2(static_cast<size_t>(M) + 1, ring_traits<R>::zero());  // g^2
    std::vector<R> g3(static_cast<size_t>(M) + 1, ring_traits<R>::zero());  // g^3
    auto refresh = [&](int upto) {
        // coefficients of g^2 and g^3 valid through `upto`
        for (int a = 0; a <= upto; ++a) {
            g2[a] = ring_traits<R>::zero();
            for (int i = 0; i <= a; ++i) g2[a].add_mul(c[i], c[a - i]);
            g3[a] = ring_traits<R>::zero();
            for (int i = 0; i <= a; ++i) g3[a].add_mul(g2[i], c[a - i]);
        }
    };
    for (int n = 2; n < M; ++n) {
        refresh(n - 2);
        R s_low = ring_traits<R>::zero();  // sum_{j<n} (j+1) c_{j+1} c_{n-j}
        for (int j = 0; j < n; ++j) {
            R t = c[j + 1] * c[n - j];
            s_low.add_mul(t, int_ratio<R>(j + 1, 1));
        }
        // (n-1) [ (n+1) c_{n+1} + s_low ] = 2 u_{n-2}
        R rhs = g3[n - 2] * int_ratio<R>(2, n - 1) - s_low;
        c[n + 1] = rhs * int_ratio<R>(1, n + 1);
    }
    return Series<R>(std::move(c), "z");
}

// g'' + g'^2 g'' - (1/3) g g'^2 - g = 0; c0 = A, c1 = k. Coefficients are
// rational functions of k (denominator powers of 1+k^2), so this recurrence
// only runs in a field ring.
template <class R>
Series<R> grade3(int M, const R& A, const R& k) {
    std::vector<R> c(static_cast<size_t>(M) + 1, ring_traits<R>::zero());
    c[0] = A;
    if (M >= 1) c[1] = k;
    std::vector<R> q(static_cast<size_t>(M) + 1, ring_traits<R>::zero());  // g'^2
    std::vector<R> r(static_cast<size_t>(M) + 1, ring_traits<R>::zero());  // g g'^2
    R lead_gate = ring_traits<R>::one() + k * k;  // 1 + c1^2
    for (int n = 0; n + 2 <= M; ++n) {
        // q_m for m <= n uses c up to m+1 <= n+1 (known)
        for (int m = 0; m <= n; ++m) {
            q[m] = ring_traits<R>::zero();
            for (int j = 0; j <= m; ++j) {
                R t = c[j + 1] * c[m - j + 1];
                q[m].add_mul(t, int_ratio<R>(static_cast<long>(j + 1) * (m - j + 1), 1));
            }
            r[m] = ring_traits<R>::zero();
            for (int j = 0; j <= m; ++j) r[m].add_mul(c[j], q[m - j]);
        }
        // (n+2)(n+1)(1 + c1^2) c_{n+2} = c_n + (1/3) r_n - sum_{m=1..n} q_m (n-m+2)(n-m+1) c_{n-m+2}
        R rhs = c[n] + r[n] * int_ratio<R>(1, 3);
        for (int m = 1; m <= n; ++m) {
            R t = q[m] * c[n - m + 2];
            rhs = rhs - t * int_ratio<R>(static_cast<long>(n - m + 2) * (n - m + 1), 1);
        }
        c[n + 2] = rhs * int_ratio<R>(1, static_cast<long>(n + 2) * (n + 1)) / lead_gate;
    }
    return Series<R>(std::move(c), "z");
}

// Compactified third-grade problem in w = e^{-z}:
// w^2 g'' (1 + w^2 g'^2) + w g' (1 + w^2 g'^2) - g (1 + w^2 g'^2 / 3) = 0,
// c0 = 0, c1 = G. Row w^n (n >= 2): (n^2-1) c_n = -sum_{m+l=n-2} q_m N_l,
// q = g'^2, N_l = (l^2 - 1/3) c_l.
template <class R>
Series<R> grade3_compact(int M, const R& G) {
    std::vector<R> c(static_cast<size_t>(M) + 1, ring_traits<R>::zero());
    if (M >= 1) c[1] = G;
    std::vector<R> q(static_cast<size_t>(M) + 1, ring_traits<R>::zero());
    for (int n = 2; n <= M; ++n) {
        for (int m = 0; m <= n - 2; ++m) {
            q[m] = ring_traits<R>::zero();
            for (int j = 0; j <= m; ++j) {
                R t = c[j + 1] * c[m - j + 1];
                q[m].add_mul(t, int_ratio<R>(static_cast<long>(j + 1) * (m - j + 1), 1));
            }
        }
        R rhs = ring_traits<R>::zero();
        for (int m = 0; m <= n - 2; ++m) {
            int l = n - 2 - m;
            R Nl = c[l] * (int_ratio<R>(static_cast<long>(l) * l, 1) - int_ratio<R>(1, 3));
            rhs.add_mul(q[m], Nl);
        }
        c[n] = -rhs * int_ratio<R>(1, static_cast<long>(n) * n - 1);
    }
    return Series<R>(std::move(c), "w");
}

// g''' + g g'' + beta (1 - g'^2) - lambda^2 (g' - 1) = 0;
// c0 = a, c1 = b, c2 = k/2. Blasius is the beta = lambda = 0 case.
template <class R>
Series<R> falkner_skan(int M, const R& k, const Rational& a, const Rational& b,
                       const Rational& beta, const Rational& lambda2) {
    std::vector<R> c(static_cast<size_t>(M) + 1, ring_traits<R>::zero());
    c[0] = ring_traits<R>::from(a);
    if (M >= 1) c[1] = ring_traits<R>::from(b);
    if (M >= 2) c[2] = k * int_ratio<R>(1, 2);
    R rbeta = ring_traits<R>::from(beta), rl2 = ring_traits<R>::from(lambda2);
    for (int n = 0; n + 3 <= M; ++n) {
        R rhs = ring_traits<R>::zero();
        // -g g''
        for (int i = 0; i <= n; ++i) {
            R t = c[i] * c[n - i + 2];
            rhs = rhs - t * int_ratio<R>(static_cast<long>(n - i + 1) * (n - i + 2), 1);
        }
        // +beta g'^2
        R gp2 = ring_traits<R>::zero();
        for (int i = 0; i <= n; ++i) {
            R t = c[i + 1] * c[n - i + 1];
            gp2.add_mul(t, int_ratio<R>(static_cast<long>(i + 1) * (n - i + 1), 1));
        }
        rhs.add_mul(rbeta, gp2);
        // +lambda^2 g'  and the constant row
        rhs.add_mul(rl2, c[n + 1] * int_ratio<R>(n + 1, 1));
        if (n == 0) rhs = rhs - rbeta - rl2;
        c[n + 3] = rhs * int_ratio<R>(1, static_cast<long>(n + 1) * (n + 2) * (n + 3));
    }
    return Series<R>(std::move(c), "z");
}

}  // namespace recurrences

// ---------------------------------------------------------------------------
// The registry of the six configurations studied.

inline Real grade3_k_from_G(const Real& G, int M, const Real& tail_tol);

namespace problems {

inline Problem polchinski() {
    Problem p;
    p.name = "polchinski";
    p.ode_order = 2;
    p.recurrence_shift = 1;
    p.ode_terms = {{Rational(4), 1, {2}}, {Rational(-4), 1, {0, 1}}, {Rational(-2), 0, {0, 0}},
                   {Rational(6), 0, {1}}, {Rational(-1), 1, {1}},    {Rational(2), 0, {0}}};
    // after g(z) = h(y), y = 1/z:
    // 4 y^3 h'' + 2 y^2 h' + 4 y h h' + y h' - 2 h^2 + 2 h = 0
    p.ode_terms_infinity = {{Rational(4), 3, {2}}, {Rational(2), 2, {1}}, {Rational(4), 1, {0, 1}},
                            {Rational(1), 1, {1}}, {Rational(-2), 0, {0, 0}}, {Rational(2), 0, {0}}};
    p.connection_deriv = 0;
    p.boundary_deriv = 0;
    p.B = SurdValue(Rational(1));
    p.trivial_roots = {Rational(0), Rational(1)};
    p.bracket_lo = Rational(-2);
    p.bracket_hi = Rational(2);
    p.expand_exact_fn = [](int M) { return recurrences::polchinski<KPoly>(M, KPoly::variable()); };
    p.expand_numeric_fn = [](int M, const Real& k) { return recurrences::polchinski<Real>(M, k); };
    p.to_original_fn = [](const Real& k) {
        return std::map<std::string, Real>{{"gamma_star", -k / Real(3)}};
    };
    return p;
}

inline Problem thomas_fermi() {
    Problem p;
    p.name = "thomas-fermi";
    p.ode_order = 2;
    p.recurrence_shift = 1;
    p.ode_terms = {{Rational(1), 1, {0, 2}}, {Rational(1), 1, {1, 1}},
                   {Rational(-1), 0, {0, 1}}, {Rational(-2), 2, {0, 0, 0}}};
    // 3 y^4 h h' + y^5 h h'' + y^5 h'^2 - 2 h^3 = 0
    p.ode_terms_infinity = {{Rational(3), 4, {0, 1}}, {Rational(1), 5, {0, 2}},
                            {Rational(1), 5, {1, 1}}, {Rational(-2), 0, {0, 0, 0}}};
    p.connection_deriv = 2;
    p.boundary_deriv = 0;
    p.B = SurdValue(Rational(0));
    p.bracket_lo = Rational(-3);
    p.bracket_hi = Rational(1);
    p.expand_exact_fn = [](int M) { return recurrences::thomas_fermi<KPoly>(M, KPoly::variable()); };
    p.expand_numeric_fn = [](int M, const Real& k) { return recurrences::thomas_fermi<Real>(M, k); };
    p.to_original_fn = [](const Real& k) {
        return std::map<std::string, Real>{{"u_prime_0", k}};
    };
    return p;
}

inline Problem grade3(const Rational& b1 = Rational(3, 5), const Rational& c = Rational(1, 2)) {
    Problem p;
    p.name = "grade3";
    p.ode_order = 2;
    p.recurrence_shift = 2;
    p.params = {{"b1", b1}, {"c", c}};
    p.ode_terms = {{Rational(1), 0, {2}}, {Rational(1), 0, {1, 1, 2}},
                   {Rational(-1, 3), 0, {0, 1, 1}}, {Rational(-1), 0, {0}}};
    p.connection_deriv = 1;
    p.boundary_deriv = 0;
    p.B = SurdValue(Rational(0));
    p.exact_ring_supported = false;  // coefficients are rational functions of k
    p.bracket_lo = Rational(-2);
    p.bracket_hi = Rational(2);
    Rational b1c = b1 * c;
    p.expand_numeric_fn = [b1c](int M, const Real& k) {
        Real A = qbvp::sqrt(b1c.to_real());
        return recurrences::grade3<Real>(M, A, k);
    };
    p.to_original_fn = [b1](const Real& k) {
        return std::map<std::string, Real>{{"f_prime_0", k / qbvp::sqrt(b1.to_real())}};
    };
    return p;
}

inline Problem grade3_compact(const Rational& b1 = Rational(3, 5), const Rational& c = Rational(1, 2)) {
    Problem p;
    p.name = "grade3-compact";
    p.var = "w";
    p.ode_order = 2;
    p.recurrence_shift = 0;
    p.params = {{"b1", b1}, {"c", c}};
    p.ode_terms = {{Rational(1), 2, {2}}, {Rational(1), 4, {1, 1, 2}}, {Rational(1), 1, {1}},
                   {Rational(1), 3, {1, 1, 1}}, {Rational(-1), 0, {0}}, {Rational(-1, 3), 2, {0, 1, 1}}};
    p.connection_deriv = 1;
    p.connection_symbol = "G";
    p.span_finite = true;
    p.span = SurdValue(Rational(1));
    p.boundary_deriv = 0;
    p.B = SurdValue(Rational(0), Rational(1), b1 * c);  // sqrt(b1 c)
    p.bracket_lo = Rational(0);
    p.bracket_hi = Rational(1);
    p.expand_exact_fn = [](int M) { return recurrences::grade3_compact<KPoly>(M, KPoly::variable()); };
    p.expand_numeric_fn = [](int M, const Real& G) { return recurrences::grade3_compact<Real>(M, G); };
    Rational b1q = b1;
    p.to_original_fn = [b1q](const Real& G) {
        Real k = grade3_k_from_G(G, 200, pow10(-18));
        return std::map<std::string, Real>{{"k_star", k}, {"f_prime_0", k / qbvp::sqrt(b1q.to_real())}};
    };
    return p;
}

inline Problem falkner_skan(const Rational& beta = Rational(4, 3), const Rational& lambda = Rational(2)) {
    Problem p;
    p.name = "falkner-skan";
    p.ode_order = 3;
    p.recurrence_shift = 3;
    Rational l2 = lambda * lambda;
    p.params = {{"beta", beta}, {"lambda", lambda}};
    p.ode_terms = {{Rational(1), 0, {3}}, {Rational(1), 0, {0, 2}}, {beta, 0, {}},
                   {-beta, 0, {1, 1}}, {-l2, 0, {1}}, {l2, 0, {}}};
    p.connection_deriv = 2;
    p.boundary_deriv = 1;
    p.B = SurdValue(Rational(1));
    p.bracket_lo = Rational(0);
    p.bracket_hi = Rational(5);
    p.expand_exact_fn = [beta, l2](int M) {
        return recurrences::falkner_skan<KPoly>(M, KPoly::variable(), Rational(0), Rational(0), beta, l2);
    };
    p.expand_numeric_fn = [beta, l2](int M, const Real& k) {
        return recurrences::falkner_skan<Real>(M, k, Rational(0), Rational(0), beta, l2);
    };
    p.to_original_fn = [](const Real&) { return std::map<std::string, Real>{}; };
    return p;
}

// Convex branch only: B = 1 with b in [0,1).
inline Problem blasius_convex(const Rational& b) {
    if (b < Rational(0) || b >= Rational(1))
        throw std::invalid_argument("blasius-convex: requires b in [0,1) (concave branch unsupported)");
    Problem p;
    p.name = b.is_zero() ? "blasius" : "blasius-convex";
    p.ode_order = 3;
    p.recurrence_shift = 3;
    p.params = {{"b", b}};
    p.ode_terms = {{Rational(1), 0, {3}}, {Rational(1), 0, {0, 2}}};
    p.connection_deriv = 2;
    p.boundary_deriv = 1;
    p.B = SurdValue(Rational(1));
    p.trivial_roots = {Rational(0)};
    p.bracket_lo = b.is_zero() ? Rational(-5) : Rational(0);
    p.bracket_hi = Rational(5);
    p.expand_exact_fn = [b](int M) {
        return recurrences::falkner_skan<KPoly>(M, KPoly::variable(), Rational(0), b, Rational(0), Rational(0));
    };
    p.expand_numeric_fn = [b](int M, const Real& k) {
        return recurrences::falkner_skan<Real>(M, k, Rational(0), b, Rational(0), Rational(0));
    };
    p.to_original_fn = [](const Real& k) {
        // genuine-Blasius normalization (B = 2): k0* = k*/sqrt(2)
        return std::map<std::string, Real>{{"k0_star", k / qbvp::sqrt(Real(2))}};
    };
    return p;
}

inline Problem blasius() { return blasius_convex(Rational(0)); }

// Name-keyed construction used by the CLI; parameters override defaults.
inline Problem make(const std::string& name, const std::map<std::string, Rational>& overrides = {}) {
    auto get = [&](const char* key, const Rational& dflt) {
        auto it = overrides.find(key);
        return it == overrides.end() ? dflt : it->second;
    };
    if (name == "polchinski") return polchinski();
    if (name == "thomas-fermi") return thomas_fermi();
    if (name == "grade3") return grade3(get("b1", Rational(3, 5)), get("c", Rational(1, 2)));
    if (name == "grade3-compact") return grade3_compact(get("b1", Rational(3, 5)), get("c", Rational(1, 2)));
    if (name == "falkner-skan") return falkner_skan(get("beta", Rational(4, 3)), get("lambda", Rational(2)));
    if (name == "blasius") return blasius();
    if (name == "blasius-convex") return blasius_convex(get("b", Rational(1, 2)));
    throw std::invalid_argument("unknown problem: " + name);
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {
        "polchinski", "thomas-fermi", "grade3", "grade3-compact",
        "falkner-skan", "blasius", "blasius-convex"};
    return n;
}

}  // namespace problems

// ---------------------------------------------------------------------------
// Operations on problems.

inline Series<KPoly> expand_exact(const Problem& p, int M) {
    if (!p.expand_exact_fn) throw unsupported_ring(p.name + ": exact coefficient ring unsupported");
    return p.expand_exact_fn(M);
}

inline Series<Real> expand_numeric(const Problem& p, int M, const Real& k) {
    if (!p.expand_numeric_fn) throw unsupported_ring(p.name + ": numeric expansion unavailable");
    return p.expand_numeric_fn(M, k);
}

namespace detail {

// Residual series of the ODE term list applied to a truncated series,
// together with row validity (rows beyond a term's truncation cannot be
// trusted) and a per-row magnitude scale for numeric comparisons.
template <class R>
struct ResidualRows {
    std::vector<R> value;
    std::vector<Real> scale;
    int valid_through = 0;
};

template <class R>
Real magnitude(const R& x);
template <>
inline Real magnitude<Real>(const Real& x) { return abs(x); }
template <>
inline Real magnitude<KPoly>(const KPoly& x) {
    Real m(0);
    for (const auto& q : x.coeffs()) m = max(m, abs(q.to_real()));
    return m;
}

template <class R>
ResidualRows<R> residual_rows(const std::vector<OdeTerm>& terms, const Series<R>& g) {
    const int M = g.order();
    int max_d = 0;
    for (const auto& t : terms)
        for (int d : t.derivs) max_d = std::max(max_d, d);
    std::vector<Series<R>> dg;
    dg.push_back(g);
    for (int d = 1; d <= max_d; ++d) dg.push_back(series_diff(dg.back()));

    ResidualRows<R> out;
    out.value.assign(static_cast<size_t>(M) + 1, ring_traits<R>::zero());
    out.scale.assign(static_cast<size_t>(M) + 1, Real(0));
    out.valid_through = M;
    for (const auto& t : terms) {
        int dmax_t = 0;
        for (int d : t.derivs) dmax_t = std::max(dmax_t, d);
        Series<R> prod = Series<R>::constant(ring_traits<R>::from(t.coef), M - dmax_t, g.var());
        for (int d : t.derivs) prod = series_mul(prod, dg[static_cast<size_t>(d)]);
        int valid_t = prod.order() + t.zpow;
        out.valid_through = std::min(out.valid_through, valid_t);
        for (int i = 0; i <= prod.order() && i + t.zpow <= M; ++i) {
            out.value[static_cast<size_t>(i + t.zpow)] = out.value[static_cast<size_t>(i + t.zpow)] + prod[static_cast<size_t>(i)];
            out.scale[static_cast<size_t>(i + t.zpow)] += magnitude(prod[static_cast<size_t>(i)]);
        }
    }
    return out;
}

template <class R>
bool row_vanishes(const R& v, const Real& scale);
template <>
inline bool row_vanishes<KPoly>(const KPoly& v, const Real&) { return v.is_zero(); }
template <>
inline bool row_vanishes<Real>(const Real& v, const Real& scale) {
    Real tol = pow10(-(Precision::digits() - 10));
    return abs(v) <= tol * max(scale, Real(1));
}

}  // namespace detail

// Highest coefficient index n such that c_0..c_n are consistent with the
// ODE: rows are scanned in order and the first failing row r invalidates
// the coefficient it pins (r + recurrence_shift).
template <class R>
int residual_check(const Problem& p, const Series<R>& g) {
    auto rows = detail::residual_rows(p.ode_terms, g);
    for (int r = 0; r <= rows.valid_through; ++r) {
        if (!detail::row_vanishes(rows.value[static_cast<size_t>(r)], rows.scale[static_cast<size_t>(r)]))
            return r + p.recurrence_shift - 1;
    }
    return g.order();
}

// Back-transformed quantities in the original variables of each problem.
inline std::map<std::string, Real> to_original(const Problem& p, const Real& k) {
    return p.to_original_fn ? p.to_original_fn(k) : std::map<std::string, Real>{};
}

// Scale invariance of the Blasius equation: zbar = z/sigma, gbar = sigma g,
// so kbar = sigma^3 k and gbar'(inf) = sigma^2 g'(inf).
struct ScalingLaw {
    int z_exponent = -1;
    int g_exponent = 1;
    int k_exponent = 3;
    int gprime_exponent = 2;
    bool applicable(const Problem& p) const { return p.name == "blasius" || p.name == "blasius-convex"; }
};

// k* = q0 [gbar'(inf)]^{-3/2}.
inline Real rescale_blasius(const Real& q0, const Real& gprime_inf) {
    if (!(gprime_inf > Real(0)))
        throw std::domain_error("rescale_blasius: g'(inf) must be positive (convex case)");
    return q0 * pow(gprime_inf, Real(-3) / Real(2));
}

// k = -gbar'(1) = -sum n c_n(G), evaluated from the compactified series.
inline Real grade3_k_from_G(const Real& G, int M = 200, const Real& tail_tol = pow10(-18)) {
    Series<Real> s = recurrences::grade3_compact<Real>(M, G);
    Real sum(0), last(0);
    for (int n = 1; n <= M; ++n) {
        Real term = s[static_cast<size_t>(n)] * Real(n);
        sum += term;
        if (!term.is_zero()) last = abs(term);
    }
    if (last > tail_tol * (abs(sum) + Real(1)))
        throw std::runtime_error("grade3_k_from_G: series tail not converged at this G/M");
    return -sum;
}

}  // namespace qbvp

#endif
