#ifndef QBVP_REAL_HPP
#define QBVP_REAL_HPP

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>

namespace qbvp {

// Context-wide working precision, in decimal digits. Every Real created
// afterwards carries the matching mpfr precision, so a run is deterministic
// once the precision and the operand sequence are fixed.
class Precision {
public:
    static long digits() { return digits_(); }

    static void set_digits(long d) {
        if (d < 16) throw std::invalid_argument("precision must be >= 16 digits");
        digits_() = d;
    }

    static mpfr_prec_t bits() {
        // 3.322 bits per decimal digit, plus guard bits.
        return static_cast<mpfr_prec_t>(digits_() * 3.3219280948873623 + 32);
    }

private:
    static long& digits_() {
        static long d = 64;
        return d;
    }
};

// RAII scope guard: set precision for a block (used by tests and the
// shooting oracle, which runs at its own fixed precision).
class ScopedPrecision {
public:
    explicit ScopedPrecision(long digits) : saved_(Precision::digits()) {
        Precision::set_digits(digits);
    }
    ~ScopedPrecision() { Precision::set_digits(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    long saved_;
};

// Arbitrary-precision real number at the context precision.
class Real {
public:
    Real() { mpfr_init2(v_, Precision::bits()); mpfr_set_zero(v_, 1); }

    Real(long n) : Real() { mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(int n) : Real(static_cast<long>(n)) {}
    explicit Real(double d) : Real() { mpfr_set_d(v_, d, MPFR_RNDN); }

    // Parse a decimal literal at full context precision.
    explicit Real(const std::string& s) : Real() {
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("Real: cannot parse '" + s + "'");
    }
    explicit Real(const char* s) : Real(std::string(s)) {}

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    // acc += a*b without an intermediate temporary (hot path of series
    // products and eliminations).
    void add_mul(const Real& a, const Real& b) { mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN); }
    void sub_mul(const Real& a, const Real& b) { mpfr_fms(v_, a.v_, b.v_, v_, MPFR_RNDN); mpfr_neg(v_, v_, MPFR_RNDN); }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    // Decimal rendering with enough digits for an exact round trip
    // (string -> Real -> string is a fixed point at equal precision).
    std::string to_string(int digits = 0) const {
        if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
        if (is_zero()) return "0";
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
        std::string m(s);
        mpfr_free_str(s);
        bool neg = (m[0] == '-');
        std::string digs = neg ? m.substr(1) : m;
        // strip trailing zeros of the mantissa
        size_t last = digs.find_last_not_of('0');
        digs = digs.substr(0, last + 1);
        if (digs.empty()) digs = "0";
        std::string out = (neg ? "-" : "");
        out += digs.substr(0, 1);
        if (digs.size() > 1) out += "." + digs.substr(1);
        out += "e" + std::to_string(static_cast<long>(e - 1));
        return out;
    }

private:
    mpfr_t v_;
};

inline Real abs(const Real& a) { Real r; mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real sqrt(const Real& a) { Real r; mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real exp(const Real& a) { Real r; mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real log(const Real& a) { Real r; mpfr_log(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real log10(const Real& a) { Real r; mpfr_log10(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real sin(const Real& a) { Real r; mpfr_sin(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real cos(const Real& a) { Real r; mpfr_cos(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real pow(const Real& a, const Real& b) { Real r; mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real pow(const Real& a, long n) { Real r; mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN); return r; }
inline Real floor(const Real& a) { Real r; mpfr_floor(r.raw(), a.raw()); return r; }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real pi() { Real r; mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }

// 10^-n at context precision; the usual way tolerances are written here.
inline Real pow10(long n) { Real r; mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(n < 0 ? -n : n), MPFR_RNDN); return n < 0 ? Real(1) / r : r; }

}  // namespace qbvp

#endif
