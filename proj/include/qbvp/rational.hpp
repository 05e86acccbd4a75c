#ifndef QBVP_RATIONAL_HPP
#define QBVP_RATIONAL_HPP

#include <gmp.h>

#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>

#include "real.hpp"

namespace qbvp {

// Exact rational with arbitrary-size integer parts. Always canonical:
// reduced, denominator > 0.
class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) : Rational() { mpq_set_si(v_, n, 1); mpq_canonicalize(v_); }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den) : Rational() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        mpq_set_si(v_, num, 1);
        mpq_t d; mpq_init(d); mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }
    explicit Rational(const std::string& s) : Rational() {
        if (mpq_set_str(v_, s.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (mpz_sgn(mpq_denref(v_)) == 0) throw std::invalid_argument("Rational: zero denominator");
        mpq_canonicalize(v_);
    }

    Rational(const Rational& o) { mpq_init(v_); mpq_set(v_, o.v_); }
    Rational(Rational&& o) noexcept { mpq_init(v_); mpq_swap(v_, o.v_); }
    Rational& operator=(const Rational& o) { if (this != &o) mpq_set(v_, o.v_); return *this; }
    Rational& operator=(Rational&& o) noexcept { if (this != &o) mpq_swap(v_, o.v_); return *this; }
    ~Rational() { mpq_clear(v_); }

    mpq_ptr raw() { return v_; }
    mpq_srcptr raw() const { return v_; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { Rational r; mpq_add(r.v_, a.v_, b.v_); return r; }
    friend Rational operator-(const Rational& a, const Rational& b) { Rational r; mpq_sub(r.v_, a.v_, b.v_); return r; }
    friend Rational operator*(const Rational& a, const Rational& b) { Rational r; mpq_mul(r.v_, a.v_, b.v_); return r; }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        Rational r; mpq_div(r.v_, a.v_, b.v_); return r;
    }
    Rational operator-() const { Rational r; mpq_neg(r.v_, v_); return r; }

    Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    void add_mul(const Rational& a, const Rational& b) {
        mpq_t t; mpq_init(t); mpq_mul(t, a.v_, b.v_); mpq_add(v_, v_, t); mpq_clear(t);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, std::strlen(s) + 1);
        return out;
    }

    Real to_real() const {
        Real r;
        mpfr_set_q(r.raw(), v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpq_get_d(v_); }

private:
    mpq_t v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

inline Rational pow(const Rational& a, long n) {
    if (n < 0) return Rational(1) / pow(a, -n);
    Rational r(1), base = a;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

}  // namespace qbvp

#endif
