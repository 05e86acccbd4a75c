#ifndef QBVP_POLY_HPP
#define QBVP_POLY_HPP

#include <gmp.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "ring.hpp"

namespace qbvp {

// Dense polynomial in the connection parameter (k, or G for the
// compactified third-grade problem) over the rationals. Coefficients are
// ascending; no trailing zero is kept, so degree == size - 1 and the zero
// polynomial is empty.
class KPoly {
public:
    KPoly() = default;
    KPoly(Rational c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
    KPoly(long n) : KPoly(Rational(n)) {}
    explicit KPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static KPoly variable() { return KPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rational& operator[](size_t i) const {
        static const Rational zero_(0);
        return i < c_.size() ? c_[i] : zero_;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("KPoly: leading coefficient of zero polynomial");
        return c_.back();
    }

    friend KPoly operator+(const KPoly& a, const KPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return KPoly(std::move(r));
    }
    friend KPoly operator-(const KPoly& a, const KPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return KPoly(std::move(r));
    }
    friend KPoly operator*(const KPoly& a, const KPoly& b) {
        if (a.is_zero() || b.is_zero()) return KPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j].add_mul(a.c_[i], b.c_[j]);
        return KPoly(std::move(r));
    }
    KPoly operator-() const {
        std::vector<Rational> r(c_);
        for (auto& x : r) x = -x;
        return KPoly(std::move(r));
    }
    KPoly& operator+=(const KPoly& o) { *this = *this + o; return *this; }
    KPoly& operator-=(const KPoly& o) { *this = *this - o; return *this; }
    KPoly& operator*=(const KPoly& o) { *this = *this * o; return *this; }

    void add_mul(const KPoly& a, const KPoly& b) { *this += a * b; }

    friend bool operator==(const KPoly& a, const KPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const KPoly& a, const KPoly& b) { return !(a == b); }

    KPoly scaled(const Rational& s) const {
        if (s.is_zero()) return KPoly();
        std::vector<Rational> r(c_);
        for (auto& x : r) x *= s;
        return KPoly(std::move(r));
    }

    KPoly derivative() const {
        if (c_.size() <= 1) return KPoly();
        std::vector<Rational> r(c_.size() - 1, Rational(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return KPoly(std::move(r));
    }

    // Horner evaluation; R is Rational, Real or Complex.
    template <class R>
    R eval(const R& x) const {
        R acc = ring_traits<R>::zero();
        for (size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + ring_traits<R>::from(c_[i]);
        }
        return acc;
    }

    // Exact quotient; throws if the division leaves a remainder
    // (Bareiss elimination relies on divisions being exact).
    KPoly div_exact(const KPoly& d) const {
        if (d.is_zero()) throw std::domain_error("KPoly: division by zero polynomial");
        KPoly rem = *this, q;
        std::vector<Rational> qc(std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            Rational f = rem.leading() / d.leading();
            int shift = rem.degree() - d.degree();
            qc[shift] = f;
            std::vector<Rational> nc(rem.c_);
            for (size_t i = 0; i < d.c_.size(); ++i) nc[i + shift] -= f * d.c_[i];
            nc.pop_back();
            rem = KPoly(std::move(nc));
        }
        if (!rem.is_zero()) throw std::domain_error("KPoly: division not exact");
        return KPoly(std::move(qc));
    }

    // Euclidean remainder over Q.
    KPoly rem(const KPoly& d) const {
        if (d.is_zero()) throw std::domain_error("KPoly: remainder by zero polynomial");
        KPoly r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational f = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            std::vector<Rational> nc(r.c_);
            for (size_t i = 0; i < d.c_.size(); ++i) nc[i + shift] -= f * d.c_[i];
            nc.pop_back();
            r = KPoly(std::move(nc));
        }
        return r;
    }

    // Positive content; primitive part keeps the leading sign.
    Rational content() const {
        if (is_zero()) return Rational(0);
        mpz_t num_gcd, den_lcm;
        mpz_init_set_ui(num_gcd, 0);
        mpz_init_set_ui(den_lcm, 1);
        for (const auto& c : c_) {
            mpz_gcd(num_gcd, num_gcd, mpq_numref(c.raw()));
            mpz_lcm(den_lcm, den_lcm, mpq_denref(c.raw()));
        }
        Rational r;
        mpz_set(mpq_numref(r.raw()), num_gcd);
        mpz_set(mpq_denref(r.raw()), den_lcm);
        mpq_canonicalize(r.raw());
        mpz_clear(num_gcd);
        mpz_clear(den_lcm);
        return r;
    }

    KPoly primitive() const {
        if (is_zero()) return *this;
        Rational c = content();
        return scaled(Rational(1) / c);
    }

    std::string to_string(const std::string& var = "k") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].to_string();
            if (i >= 1) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

template <>
struct ring_traits<KPoly> {
    static constexpr bool exact = true;
    static KPoly zero() { return KPoly(); }
    static KPoly one() { return KPoly(1); }
    static KPoly from(const Rational& q) { return KPoly(q); }
    static bool is_zero(const KPoly& x) { return x.is_zero(); }
};

inline KPoly gcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
        KPoly r = a.rem(b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    a = a.primitive();
    if (a.leading().sign() < 0) a = -a;
    return a;
}

}  // namespace qbvp

#endif
