#ifndef QBVP_COMPLEX_HPP
#define QBVP_COMPLEX_HPP

#include "real.hpp"

namespace qbvp {

// Complex number over Real; modulus/argument at the context precision.
struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r) : re(r) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex operator-() const { return {-re, -im}; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
    Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }

    void add_mul(const Complex& a, const Complex& b) {
        re.add_mul(a.re, b.re);
        Real t = a.im * b.im;
        re -= t;
        im.add_mul(a.re, b.im);
        im.add_mul(a.im, b.re);
    }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    std::string to_string() const { return re.to_string() + (im.sign() < 0 ? "" : "+") + im.to_string() + "i"; }
};

inline Real abs(const Complex& z) {
    Real r;
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

// Principal branch.
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline Complex pow(const Complex& z, const Real& e) {
    if (z.is_zero()) return Complex(0);
    return exp(Complex(e) * log(z));
}

inline Complex sqrt(const Complex& z) {
    if (z.is_zero()) return Complex(0);
    Real m = sqrt(abs(z));
    Real a = arg(z) / Real(2);
    return {m * cos(a), m * sin(a)};
}

}  // namespace qbvp

#endif
