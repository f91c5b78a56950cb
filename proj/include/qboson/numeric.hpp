#ifndef QBOSON_NUMERIC_HPP
#define QBOSON_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace qboson {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Arbitrary-precision real with runtime precision (MPFR backed).
using Real = boost::multiprecision::mpfr_float;

// Decimal digits used by the numeric backend.  Default 50, overridable
// through the QREAL_PRECISION environment variable.  Applied once at
// program start.
int numeric_precision();
void set_numeric_precision(int digits10);

Real to_real(const Rational& r);
Real to_real(long v);

// Minimal complex type over Real.  Entries of HP operators can pick up an
// imaginary unit when a radicand goes negative (non-integer p, or states
// beyond the F_0 boundary), so the numeric backend is complex-capable
// while q itself stays real and positive.
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }

    Complex operator-() const { return Complex(-re, -im); }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re + b.re, a.im + b.im);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re - b.re, a.im - b.im);
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / d,
                       (a.im * b.re - a.re * b.im) / d);
    }
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

Real abs(const Complex& z);
Complex conj(const Complex& z);
// Principal branch: nonnegative real part.
Complex csqrt(const Complex& z);

// The q-bracket [x] = (q^x - q^{-x}) / (q - q^{-1}) for real x, q > 0.
// At q = 1 the limit value x is returned.  q <= 0 is rejected.
Real qbracket_value(const Real& x, const Real& q);

// q^x for real x, q > 0.
Real qpow_value(const Real& x, const Real& q);

std::string to_decimal_string(const Real& v);

}  // namespace qboson

#endif
