#include "qboson/numeric.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qboson {

namespace {

int g_digits10 = 50;

int read_env_precision() {
    const char* env = std::getenv("QREAL_PRECISION");
    if (env) {
        int d = std::atoi(env);
        if (d >= 10) return d;
    }
    return 50;
}

struct PrecisionInit {
    PrecisionInit() {
        g_digits10 = read_env_precision();
        Real::default_precision(static_cast<unsigned>(g_digits10));
    }
};

PrecisionInit g_precision_init;

}  // namespace

int numeric_precision() { return g_digits10; }

void set_numeric_precision(int digits10) {
    if (digits10 < 10) throw std::invalid_argument("precision below 10 digits");
    g_digits10 = digits10;
    Real::default_precision(static_cast<unsigned>(digits10));
}

Real to_real(const Rational& r) {
    Real num(boost::multiprecision::numerator(r).str());
    Real den(boost::multiprecision::denominator(r).str());
    return num / den;
}

Real to_real(long v) { return Real(v); }

Real abs(const Complex& z) {
    using boost::multiprecision::sqrt;
    return sqrt(z.re * z.re + z.im * z.im);
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex csqrt(const Complex& z) {
    using boost::multiprecision::sqrt;
    if (z.im == 0) {
        if (z.re >= 0) return Complex(sqrt(z.re));
        return Complex(Real(0), sqrt(-z.re));
    }
    Real r = abs(z);
    Real u = sqrt((r + z.re) / 2);
    Real v = sqrt((r - z.re) / 2);
    if (z.im < 0) v = -v;
    return Complex(u, v);
}

Real qpow_value(const Real& x, const Real& q) {
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    if (q <= 0) throw std::domain_error("qpow_value: q must be positive");
    return exp(x * log(q));
}

Real qbracket_value(const Real& x, const Real& q) {
    if (q <= 0) throw std::domain_error("qbracket_value: q must be positive");
    if (q == 1) return x;  // limit value
    Real qx = qpow_value(x, q);
    return (qx - 1 / qx) / (q - 1 / q);
}

std::string to_decimal_string(const Real& v) {
    return v.str(g_digits10, std::ios_base::scientific);
}

}  // namespace qboson
