#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qbvp/matrix.hpp"
#include "qbvp/poly.hpp"
#include "qbvp/roots.hpp"
#include "qbvp/series.hpp"

using namespace qbvp;

namespace {

Rational random_rational(std::mt19937& rng, int num_range = 20, int den_range = 9) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

Series<Rational> random_series(std::mt19937& rng, int M) {
    std::vector<Rational> c;
    for (int i = 0; i <= M; ++i) c.push_back(random_rational(rng));
    return Series<Rational>(std::move(c));
}

}  // namespace

TEST_CASE("real arithmetic respects the context precision") {
    ScopedPrecision prec(64);
    Real a = Real(1) / Real(3);
    Real b = a * Real(3) - Real(1);
    REQUIRE(abs(b) < pow10(-60));
    // round trip of the decimal rendering is a fixed point
    std::string s1 = a.to_string();
    Real back(s1);
    REQUIRE(back.to_string() == s1);
}

TEST_CASE("series_mul matches hand-computed products") {
    // (1+z)(1-z) truncated at M=2 -> 1 - z^2
    Series<Rational> a({Rational(1), Rational(1), Rational(0)});
    Series<Rational> b({Rational(1), Rational(-1), Rational(0)});
    auto p = series_mul(a, b);
    REQUIRE(p[0] == Rational(1));
    REQUIRE(p[1] == Rational(0));
    REQUIRE(p[2] == Rational(-1));

    // identity factor
    Series<Rational> one({Rational(1), Rational(0), Rational(0)});
    Series<Rational> q({Rational(1), Rational(1), Rational(1)});
    auto r = series_mul(q, one);
    REQUIRE(r.coeffs() == q.coeffs());

    // geometric x geometric, M=3 -> 1 + 2z + 3z^2 + 4z^3 (direct convolution)
    Series<Rational> g({Rational(1), Rational(1), Rational(1), Rational(1)});
    auto gg = series_mul(g, g);
    REQUIRE(gg[0] == Rational(1));
    REQUIRE(gg[1] == Rational(2));
    REQUIRE(gg[2] == Rational(3));
    REQUIRE(gg[3] == Rational(4));
}

TEST_CASE("series_mul rejects variable mismatch") {
    Series<Rational> a({Rational(1), Rational(1)}, "z");
    Series<Rational> b({Rational(1), Rational(1)}, "w");
    REQUIRE_THROWS_AS(series_mul(a, b), std::invalid_argument);
}

TEST_CASE("series_diff basics and the M=0 error") {
    Series<Rational> a({Rational(1), Rational(1), Rational(1)});
    auto d = series_diff(a);
    REQUIRE(d.order() == 1);
    REQUIRE(d[0] == Rational(1));
    REQUIRE(d[1] == Rational(2));

    // second derivative of z^3 -> 6z
    Series<Rational> z3({Rational(0), Rational(0), Rational(0), Rational(1)});
    auto d2 = series_diff(series_diff(z3));
    REQUIRE(d2[0] == Rational(0));
    REQUIRE(d2[1] == Rational(6));

    Series<Rational> c({Rational(5)});
    REQUIRE_THROWS_AS(series_diff(c), std::invalid_argument);
}

TEST_CASE("series_compose basics") {
    // outer = z, inner = w + w^2 + w^3 (w/(1-w) truncated): identity outer
    Series<Rational> outer_id({Rational(0), Rational(1), Rational(0), Rational(0)});
    Series<Rational> inner({Rational(0), Rational(1), Rational(1), Rational(1)});
    auto comp = series_compose(outer_id, inner);
    REQUIRE(comp.coeffs() == inner.coeffs());

    // outer = z^2, inner = w + w^2, M=3 -> w^2 + 2w^3
    Series<Rational> outer_sq({Rational(0), Rational(0), Rational(1), Rational(0)});
    Series<Rational> inner2({Rational(0), Rational(1), Rational(1), Rational(0)});
    auto comp2 = series_compose(outer_sq, inner2);
    REQUIRE(comp2[0] == Rational(0));
    REQUIRE(comp2[1] == Rational(0));
    REQUIRE(comp2[2] == Rational(1));
    REQUIRE(comp2[3] == Rational(2));

    // constant outer
    Series<Rational> outer_c({Rational(1), Rational(0)});
    auto comp3 = series_compose(outer_c, inner2.truncated(1));
    REQUIRE(comp3[0] == Rational(1));
    REQUIRE(comp3[1] == Rational(0));

    // nonzero inner constant term rejected
    Series<Rational> bad({Rational(1), Rational(1)});
    REQUIRE_THROWS_AS(series_compose(outer_id, bad), std::invalid_argument);
}

TEST_CASE("binomial series examples") {
    ScopedPrecision prec(64);
    auto lin = binomial_series<Rational>(Rational(1), 3);
    REQUIRE(lin[0] == Rational(1));
    REQUIRE(lin[1] == Rational(1));
    REQUIRE(lin[2] == Rational(0));
    REQUIRE(lin[3] == Rational(0));

    auto geo = binomial_series<Rational>(Rational(-1), 3);
    REQUIRE(geo[1] == Rational(-1));
    REQUIRE(geo[2] == Rational(1));
    REQUIRE(geo[3] == Rational(-1));

    // alpha = 1/2, M=2 -> 1 + w/2 - w^2/8
    auto sq = binomial_series<Rational>(Rational(1, 2), 2);
    REQUIRE(sq[1] == Rational(1, 2));
    REQUIRE(sq[2] == Rational(-1, 8));
}

TEST_CASE("property: series algebra laws in the exact ring") {
    std::mt19937 rng(20240811);
    for (int rep = 0; rep < 12; ++rep) {
        int M = 3 + static_cast<int>(rng() % 18);  // M <= 20
        auto a = random_series(rng, M);
        auto b = random_series(rng, M);
        auto c = random_series(rng, M);
        auto ab_c = series_mul(series_mul(a, b), c);
        auto a_bc = series_mul(a, series_mul(b, c));
        REQUIRE(ab_c.coeffs() == a_bc.coeffs());
        auto distl = series_mul(a, b + c);
        auto distr = series_mul(a, b) + series_mul(a, c);
        REQUIRE(distl.coeffs() == distr.coeffs());
    }
}

TEST_CASE("property: Leibniz rule through order M-1") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 8; ++rep) {
        int M = 4 + static_cast<int>(rng() % 16);
        auto a = random_series(rng, M);
        auto b = random_series(rng, M);
        auto lhs = series_diff(series_mul(a, b));
        auto rhs = series_mul(series_diff(a), b.truncated(M - 1)) + series_mul(a.truncated(M - 1), series_diff(b));
        for (int i = 0; i <= M - 1 - 1; ++i) REQUIRE(lhs[static_cast<size_t>(i)] == rhs[static_cast<size_t>(i)]);
    }
}

TEST_CASE("property: binomial series inverse pairs") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        Rational alpha = random_rational(rng, 9, 7);
        int M = 12;
        auto plus = binomial_series<Rational>(alpha, M);
        auto minus = binomial_series<Rational>(-alpha, M);
        auto prod = series_mul(plus, minus);
        REQUIRE(prod[0] == Rational(1));
        for (int i = 1; i <= M; ++i) REQUIRE(prod[static_cast<size_t>(i)] == Rational(0));
    }
}

TEST_CASE("poly_real_roots on factored polynomials") {
    ScopedPrecision prec(64);
    // k^2 - 1 on [-2, 2]
    KPoly p(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
    auto roots = poly_real_roots(p, Rational(-2), Rational(2));
    REQUIRE(roots.size() == 2);
    REQUIRE(abs(roots[0].value + Real(1)) < pow10(-50));
    REQUIRE(abs(roots[1].value - Real(1)) < pow10(-50));

    // k(k-1)(k+1/2) on [-1, 2]
    KPoly k = KPoly::variable();
    KPoly q = k * (k - KPoly(1)) * (k + KPoly(Rational(1, 2)));
    auto r2 = poly_real_roots(q, Rational(-1), Rational(2));
    REQUIRE(r2.size() == 3);
    REQUIRE(abs(r2[0].value + Real(Rational(1, 2).to_real())) < pow10(-50));
    REQUIRE(abs(r2[1].value) < pow10(-50));
    REQUIRE(abs(r2[2].value - Real(1)) < pow10(-50));

    // Wilkinson-style prod (k - i/10), i=1..6 on [0,1]
    KPoly w(Rational(1));
    for (int i = 1; i <= 6; ++i) w = w * (k - KPoly(Rational(i, 10)));
    auto r3 = poly_real_roots(w, Rational(0), Rational(1));
    REQUIRE(r3.size() == 6);
    for (int i = 1; i <= 6; ++i) {
        REQUIRE(abs(r3[static_cast<size_t>(i - 1)].value - Rational(i, 10).to_real()) < pow10(-45));
        REQUIRE(r3[static_cast<size_t>(i - 1)].multiplicity == 1);
    }

    // endpoint roots must be signalled
    REQUIRE_THROWS_AS(poly_real_roots(q, Rational(0), Rational(2)), bracket_endpoint_root);
}

TEST_CASE("poly_real_roots reports multiplicities") {
    KPoly k = KPoly::variable();
    KPoly p = (k - KPoly(Rational(1, 3))) * (k - KPoly(Rational(1, 3))) * (k + KPoly(1));
    auto roots = poly_real_roots(p, Rational(-2), Rational(2));
    REQUIRE(roots.size() == 2);
    REQUIRE(roots[0].multiplicity == 1);
    REQUIRE(roots[1].multiplicity == 2);
}

TEST_CASE("property: refined roots satisfy the residual bound") {
    ScopedPrecision prec(64);
    std::mt19937 rng(5);
    for (int rep = 0; rep < 6; ++rep) {
        KPoly k = KPoly::variable();
        KPoly p(Rational(1));
        std::vector<Rational> placed;
        for (int i = 0; i < 5; ++i) {
            Rational r = random_rational(rng, 8, 5);
            p = p * (k - KPoly(r));
            placed.push_back(r);
        }
        Rational lo(-20), hi(20);
        auto roots = poly_real_roots(p, lo, hi);
        Real bound = pow10(-(Precision::digits() - 8));
        for (const auto& root : roots) {
            Real scale(0);
            Real zp(1);
            for (const auto& coef : p.coeffs()) {
                scale += abs(coef.to_real()) * zp;
                zp *= abs(root.value);
            }
            REQUIRE(abs(p.eval(root.value)) <= bound * max(scale, Real(1)));
        }
    }
}

TEST_CASE("determinants: exact and numeric kernels") {
    // identity 3x3
    Matrix<Rational> id(3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = Rational(1);
    REQUIRE(det(id) == Rational(1));

    // [[k,1],[1,k]] -> k^2 - 1
    Matrix<KPoly> mk(2);
    mk.at(0, 0) = KPoly::variable();
    mk.at(1, 1) = KPoly::variable();
    mk.at(0, 1) = KPoly(1);
    mk.at(1, 0) = KPoly(1);
    KPoly d = det(mk);
    REQUIRE(d == KPoly(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}));

    // 4x4 Hankel of c_n = 2^n is rank one -> determinant 0
    Matrix<Rational> h(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h.at(i, j) = pow(Rational(2), i + j);
    REQUIRE(det(h).is_zero());

    // numeric kernel agrees on the same matrices
    ScopedPrecision prec(64);
    Matrix<Real> hn(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) hn.at(i, j) = pow(Real(2), static_cast<long>(i + j));
    REQUIRE(abs(det(hn)) < pow10(-50));
}

TEST_CASE("property: det commutes with evaluation at k") {
    ScopedPrecision prec(64);
    std::mt19937 rng(31);
    for (int rep = 0; rep < 4; ++rep) {
        int n = 3 + static_cast<int>(rng() % 2);
        Matrix<KPoly> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<Rational> cs;
                for (int d = 0; d < 3; ++d) cs.push_back(random_rational(rng, 6, 4));
                m.at(i, j) = KPoly(std::move(cs));
            }
        KPoly dp = det(m);
        for (int s = 0; s < 5; ++s) {
            Rational kq = random_rational(rng, 5, 6);
            Matrix<Rational> me(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) me.at(i, j) = m.at(i, j).eval(kq);
            REQUIRE(det(me) == dp.eval(kq));
        }
    }
}

TEST_CASE("complex polynomial roots") {
    ScopedPrecision prec(64);
    // (z-1)(z-2)(z - (1+i)) expanded
    std::vector<Complex> c = {
        Complex(Real(-2), Real(-2)),   // constant
        Complex(Real(5), Real(3)),
        Complex(Real(-4), Real(-1)),
        Complex(Real(1), Real(0)),
    };
    auto roots = complex_poly_roots(c);
    REQUIRE(roots.size() == 3);
    auto has_root = [&](double re, double im) {
        for (const auto& r : roots)
            if (abs(r - Complex(Real(re), Real(im))) < pow10(-40)) return true;
        return false;
    };
    REQUIRE(has_root(1, 0));
    REQUIRE(has_root(2, 0));
    REQUIRE(has_root(1, 1));
}

TEST_CASE("scan_roots finds bracketed zeros of a callable") {
    ScopedPrecision prec(64);
    auto f = [](const Real& x) { return (x - Real(1)) * (x + Real(3)) * x; };
    auto roots = scan_roots(f, Real(-5), Real(5), Real(Rational(1, 100).to_real()), pow10(-40));
    REQUIRE(roots.size() == 3);
    REQUIRE(abs(roots[0].value + Real(3)) < pow10(-35));
    REQUIRE(abs(roots[1].value) < pow10(-35));
    REQUIRE(abs(roots[2].value - Real(1)) < pow10(-35));
}
