#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qbvp/problems.hpp"

using namespace qbvp;

namespace {
KPoly kvar() { return KPoly::variable(); }
}

TEST_CASE("polchinski series matches the displayed Maclaurin coefficients") {
    auto s = expand_exact(problems::polchinski(), 3);
    KPoly k = kvar();
    REQUIRE(s[0] == k);
    REQUIRE(s[1] == ((k - KPoly(1)) * k).scaled(Rational(1, 3)));
    REQUIRE(s[2] == ((k - KPoly(1)) * k * (k.scaled(Rational(8)) - KPoly(1))).scaled(Rational(1, 60)));
    REQUIRE(s[3] == ((k - KPoly(1)) * k * k * (k.scaled(Rational(34)) - KPoly(13))).scaled(Rational(1, 630)));
}

TEST_CASE("polchinski consistency condition at the regular singular point") {
    // c1 = c0 (c0 - 1) / 3 holds identically in k
    auto s = expand_exact(problems::polchinski(), 2);
    KPoly expect = (s[0] * (s[0] - KPoly(1))).scaled(Rational(1, 3));
    REQUIRE(s[1] == expect);
}

TEST_CASE("thomas-fermi series matches the displayed Maclaurin coefficients") {
    auto s = expand_exact(problems::thomas_fermi(), 7);
    KPoly k = kvar();
    REQUIRE(s[0] == KPoly(1));
    REQUIRE(s[1] == KPoly());
    REQUIRE(s[2] == k.scaled(Rational(1, 2)));
    REQUIRE(s[3] == KPoly(Rational(2, 3)));
    REQUIRE(s[4] == (k * k).scaled(Rational(-1, 8)));
    REQUIRE(s[5] == k.scaled(Rational(-2, 15)));
    REQUIRE(s[6] == (k * k * k).scaled(Rational(9, 8 * 18)) - KPoly(Rational(1, 18)));
    REQUIRE(s[7] == (k * k).scaled(Rational(6, 35)));
}

TEST_CASE("blasius series: displayed terms, sparsity and A_i recurrence values") {
    auto s = expand_exact(problems::blasius(), 14);
    KPoly k = kvar();
    REQUIRE(s[2] == k.scaled(Rational(1, 2)));
    REQUIRE(s[5] == (k * k).scaled(Rational(-1, 120)));
    REQUIRE(s[8] == (k * k * k).scaled(Rational(11, 40320)));
    REQUIRE(s[11] == (k * k * k * k).scaled(Rational(-5, 532224)));
    REQUIRE(s[14] == (k * k * k * k * k).scaled(Rational(9299, 29059430400L)));
    // coefficient of z^n vanishes unless n = 2 (mod 3)
    for (int n = 0; n <= 14; ++n)
        if (n % 3 != 2) REQUIRE(s[static_cast<size_t>(n)].is_zero());
    // A_i = |c_{3i+2}| (3i+2)! : A_0 = A_1 = 1, A_2 = 11
    Rational f8(1);
    for (long i = 2; i <= 8; ++i) f8 *= Rational(i);
    REQUIRE(abs(s[8].coeffs()[3]) * f8 == Rational(11));
}

TEST_CASE("falkner-skan (beta=4/3, lambda=2) series matches the paper") {
    auto s = expand_exact(problems::falkner_skan(), 7);
    KPoly k = kvar();
    REQUIRE(s[0].is_zero());
    REQUIRE(s[1].is_zero());
    REQUIRE(s[2] == k.scaled(Rational(1, 2)));
    REQUIRE(s[3] == KPoly(Rational(-8, 9)));
    REQUIRE(s[4] == k.scaled(Rational(1, 6)));
    REQUIRE(s[5] == (k * k).scaled(Rational(5, 360)) - KPoly(Rational(64, 360)));
    REQUIRE(s[6] == k.scaled(Rational(-1, 135)));
    REQUIRE(s[7] == (k * k).scaled(Rational(12, 2835)) + KPoly(Rational(16, 2835)));
}

TEST_CASE("compactified third-grade series in G") {
    auto s = expand_exact(problems::grade3_compact(), 9);
    KPoly G = kvar();
    REQUIRE(s[0].is_zero());
    REQUIRE(s[1] == G);
    REQUIRE(s[2].is_zero());
    REQUIRE(s[3] == (G * G * G).scaled(Rational(-1, 12)));
    REQUIRE(s[5] == (G * G * G * G * G).scaled(Rational(19, 432)));
    REQUIRE(s[7] == (G * G * G * G * G * G * G).scaled(Rational(-577, 15552)));
    REQUIRE(s[9] == (G * G * G * G * G * G * G * G * G).scaled(Rational(4057, 103680)));
}

TEST_CASE("original third-grade series (numeric ring only)") {
    ScopedPrecision prec(64);
    auto p = problems::grade3();
    REQUIRE_THROWS_AS(expand_exact(p, 4), unsupported_ring);

    Real k("-0.3");
    auto s = expand_numeric(p, 3, k);
    Real A = sqrt(Real(3) / Real(10));
    REQUIRE(abs(s[0] - A) < pow10(-60));
    REQUIRE(abs(s[1] - k) < pow10(-60));
    Real k2 = k * k;
    Real c2 = (k2 + Real(3)) / (Real(2) * sqrt(Real(30)) * (k2 + Real(1)));
    REQUIRE(abs(s[2] - c2) < pow10(-58));
    Real c3 = k * (k2 + Real(3)) * (Real(5) * k2 * k2 + Real(10) * k2 + Real(3)) /
              (Real(90) * pow(k2 + Real(1), 3L));
    REQUIRE(abs(s[3] - c3) < pow10(-58));
}

TEST_CASE("convex-blasius Cauchy series at b=1/2, k=1") {
    ScopedPrecision prec(64);
    auto p = problems::blasius_convex(Rational(1, 2));
    auto s = expand_numeric(p, 9, Real(1));
    auto want = [&](int n, long num, long den) {
        REQUIRE(abs(s[static_cast<size_t>(n)] - Rational(num, den).to_real()) < pow10(-58));
    };
    want(0, 0, 1);
    want(1, 1, 2);
    want(2, 1, 2);
    want(3, 0, 1);
    want(4, -1, 48);
    want(5, -1, 120);
    want(6, 1, 960);
    want(7, 11, 10080);
    want(8, 73, 322560);
    want(9, -43, 483840);
}

TEST_CASE("concave blasius boundary data is rejected") {
    REQUIRE_THROWS_AS(problems::blasius_convex(Rational(1)), std::invalid_argument);
    REQUIRE_THROWS_AS(problems::blasius_convex(Rational(-1, 4)), std::invalid_argument);
}

TEST_CASE("property: numeric expansion equals exact expansion at random k") {
    ScopedPrecision prec(64);
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(7, 13);
    for (const auto& name : problems::names()) {
        auto p = problems::make(name);
        if (!p.exact_ring_supported) continue;
        auto se = expand_exact(p, 25);
        for (int rep = 0; rep < 5; ++rep) {
            Rational kq(num(rng), den(rng));
            Real k = kq.to_real();
            auto sn = expand_numeric(p, 25, k);
            for (int n = 0; n <= 25; ++n) {
                Real ev = se[static_cast<size_t>(n)].eval(k);
                Real scale = max(Real(1), abs(ev));
                REQUIRE(abs(sn[static_cast<size_t>(n)] - ev) <= pow10(-50) * scale);
            }
        }
    }
}

TEST_CASE("property: residual_check validates every recurrence") {
    ScopedPrecision prec(64);
    for (const auto& name : problems::names()) {
        auto p = problems::make(name);
        for (int M : {10, 25, 41, 60}) {
            // exact ring for small orders, numeric spot checks up to M=60
            int got;
            if (p.exact_ring_supported && M <= 25) {
                got = residual_check(p, expand_exact(p, M));
            } else {
                got = residual_check(p, expand_numeric(p, M, Real("-0.52")));
            }
            INFO(name << " M=" << M);
            REQUIRE(got >= M - p.ode_order);
        }
    }
}

TEST_CASE("residual_check on the trivial blasius solution and a corrupted series") {
    ScopedPrecision prec(64);
    auto blas = problems::blasius();
    Series<Real> zero = Series<Real>::constant(Real(0), 10, "z");
    REQUIRE(residual_check(blas, zero) == 10);

    auto pol = problems::polchinski();
    auto s = expand_numeric(pol, 10, Real("0.4"));
    REQUIRE(residual_check(pol, s) == 10);
    s[5] += Real(1) / Real(7);  // corrupt c_5
    REQUIRE(residual_check(pol, s) == 4);
}

TEST_CASE("to_original: per-problem back transformations") {
    ScopedPrecision prec(64);
    // polchinski: gamma* = -k*/3
    Real k("-0.22859820243702192438");
    auto m = to_original(problems::polchinski(), k);
    REQUIRE(abs(m.at("gamma_star") - (-k / Real(3))) < pow10(-60));

    // thomas-fermi: u'(0) = k under u(x) = g(sqrt(x))^2
    auto tf = to_original(problems::thomas_fermi(), Real("-1.5"));
    REQUIRE(abs(tf.at("u_prime_0") + Real("1.5")) < pow10(-60));

    // third grade: f'(0) = k / sqrt(b1)
    Real kg("-0.525410175091336");
    auto g3 = to_original(problems::grade3(), kg);
    REQUIRE(abs(g3.at("f_prime_0") - Real("-0.678301")) < pow10(-6));
}

TEST_CASE("thomas-fermi transform identity: u'(0) recovered from the series") {
    // u(x) = g(sqrt(x))^2 expanded to first order: u'(0) = 2 c0 c2 + c1^2 |_{c0=1,c1=0} with
    // x = z^2, i.e. u'(0) = g''(0) = k; checked against the exact series.
    auto s = expand_exact(problems::thomas_fermi(), 3);
    KPoly up0 = s[0] * s[2] * KPoly(2) + s[1] * s[1];
    REQUIRE(up0 == kvar());
}

TEST_CASE("rescale_blasius") {
    ScopedPrecision prec(64);
    REQUIRE(abs(rescale_blasius(Real(1), Real(1)) - Real(1)) < pow10(-60));
    Real gpi("1.6859083455430216");
    Real one = rescale_blasius(Real(1), gpi);
    Real two = rescale_blasius(Real(2), gpi);
    REQUIRE(abs(two - Real(2) * one) < pow10(-55));
    REQUIRE_THROWS_AS(rescale_blasius(Real(1), Real(-1)), std::domain_error);
}

TEST_CASE("grade3_k_from_G: limits and displayed expansion") {
    ScopedPrecision prec(64);
    REQUIRE(grade3_k_from_G(Real(0), 20).is_zero());

    // k(G) = -G + G^3/4 - 95 G^5/432 + ... ; check the three displayed terms exactly
    auto s = expand_exact(problems::grade3_compact(), 5);
    KPoly G = kvar();
    KPoly k_series = -(s[1] + s[3].scaled(Rational(3)) + s[5].scaled(Rational(5)));
    REQUIRE(k_series == -G + (G * G * G).scaled(Rational(1, 4)) - (G * G * G * G * G).scaled(Rational(95, 432)));
    // hand value at G = 1/2: -0.5 + 0.03125 - 0.006872... = -0.47562...
    Real three_terms = k_series.eval(Real(1) / Real(2));
    REQUIRE(abs(three_terms - Real("-0.475622106481481481")) < pow10(-15));

    // paper value at G*: order 60 resolves ~9 digits, order 200 all 15
    Real G_star("0.56044886606934678");
    Real k60 = grade3_k_from_G(G_star, 60, pow10(-8));
    REQUIRE(abs(k60 - Real("-0.525410175091336")) < pow10(-8));
    Real k_star = grade3_k_from_G(G_star, 200);
    REQUIRE(abs(k_star - Real("-0.525410175091336")) < pow10(-14));

    // non-converged tail must be signalled
    REQUIRE_THROWS(grade3_k_from_G(Real("0.99"), 10, pow10(-25)));
}

TEST_CASE("scaling law bookkeeping") {
    ScalingLaw law;
    REQUIRE(law.applicable(problems::blasius()));
    REQUIRE(!law.applicable(problems::thomas_fermi()));
    REQUIRE(law.k_exponent == 3);
    REQUIRE(law.gprime_exponent == 2);
}
