#include "qboson/scalar.hpp"

#include <stdexcept>

namespace qboson {

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::ExactLaurent: return "exact-laurent";
        case Backend::ExactRadical: return "exact-radical";
        case Backend::Numeric: return "numeric";
    }
    return "?";
}

Backend backend_from_name(const std::string& name) {
    if (name == "exact-laurent" || name == "exact") return Backend::ExactLaurent;
    if (name == "exact-radical") return Backend::ExactRadical;
    if (name == "numeric") return Backend::Numeric;
    throw std::invalid_argument("unknown backend: " + name);
}

Scalar Scalar::zero(Backend b, const Real& q) {
    return from_rational(Rational(0), b, q);
}

Scalar Scalar::from_rational(const Rational& c, Backend b, const Real& q) {
    switch (b) {
        case Backend::ExactLaurent: return Scalar(QLaurent(c));
        case Backend::ExactRadical: return Scalar(QRadical(c));
        case Backend::Numeric: return Scalar(QNumeric{Complex(to_real(c)), q});
    }
    throw std::logic_error("bad backend");
}

Scalar Scalar::q_monomial(int exponent, Backend b, const Real& q) {
    switch (b) {
        case Backend::ExactLaurent:
            return Scalar(QLaurent::monomial(exponent));
        case Backend::ExactRadical:
            return Scalar(QRadical(QLaurent::monomial(exponent)));
        case Backend::Numeric: {
            using boost::multiprecision::pow;
            return Scalar(QNumeric{Complex(pow(q, exponent)), q});
        }
    }
    throw std::logic_error("bad backend");
}

Backend Scalar::backend() const {
    if (std::holds_alternative<QLaurent>(v_)) return Backend::ExactLaurent;
    if (std::holds_alternative<QRadical>(v_)) return Backend::ExactRadical;
    return Backend::Numeric;
}

bool Scalar::is_zero() const {
    if (auto* l = laurent()) return l->is_zero();
    if (auto* r = radical()) return r->is_zero();
    const QNumeric& n = *numeric();
    return n.value.re == 0 && n.value.im == 0;
}

Scalar Scalar::operator-() const {
    if (auto* l = laurent()) return Scalar(-*l);
    if (auto* r = radical()) return Scalar(-*r);
    const QNumeric& n = *numeric();
    return Scalar(QNumeric{-n.value, n.q});
}

namespace {

[[noreturn]] void mismatch() {
    throw std::invalid_argument("scalar backend mismatch");
}

const QNumeric& num_check(const Scalar& a, const Scalar& b) {
    const QNumeric *na = a.numeric(), *nb = b.numeric();
    if (!na || !nb) mismatch();
    if (na->q != nb->q) throw std::invalid_argument("scalar q mismatch");
    return *na;
}

QRadical as_radical(const Scalar& s) {
    if (auto* l = s.laurent()) return QRadical(*l);
    if (auto* r = s.radical()) return *r;
    mismatch();
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.numeric() || b.numeric()) {
        const QNumeric& na = num_check(a, b);
        return Scalar(QNumeric{na.value + b.numeric()->value, na.q});
    }
    if (a.laurent() && b.laurent()) return Scalar(*a.laurent() + *b.laurent());
    return Scalar(as_radical(a) + as_radical(b));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.numeric() || b.numeric()) {
        const QNumeric& na = num_check(a, b);
        return Scalar(QNumeric{na.value - b.numeric()->value, na.q});
    }
    if (a.laurent() && b.laurent()) return Scalar(*a.laurent() - *b.laurent());
    return Scalar(as_radical(a) - as_radical(b));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.numeric() || b.numeric()) {
        const QNumeric& na = num_check(a, b);
        return Scalar(QNumeric{na.value * b.numeric()->value, na.q});
    }
    if (a.laurent() && b.laurent()) return Scalar(*a.laurent() * *b.laurent());
    return Scalar(as_radical(a) * as_radical(b));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.numeric() && b.numeric())
        return a.numeric()->value == b.numeric()->value;
    if (a.laurent() && b.laurent()) return *a.laurent() == *b.laurent();
    if (a.numeric() || b.numeric()) return false;
    return as_radical(a) == as_radical(b);
}

Complex Scalar::eval(const Real& q) const {
    if (auto* l = laurent()) return Complex(l->eval(q));
    if (auto* r = radical()) return r->eval(q);
    return numeric()->value;
}

std::string Scalar::str() const {
    if (auto* l = laurent()) return l->str();
    if (auto* r = radical()) return r->str();
    const QNumeric& n = *numeric();
    std::string s = to_decimal_string(n.value.re);
    if (!(n.value.im == 0)) s += " + " + to_decimal_string(n.value.im) + "i";
    return s;
}

std::vector<Real> zero_test_samples() {
    using boost::multiprecision::exp;
    std::vector<Real> qs;
    for (const char* s : {"1/2", "7/10", "9/10", "11/10", "3/2", "2", "5/2"})
        qs.push_back(to_real(Rational(s)));
    qs.push_back(exp(Real(1) / 10));
    return qs;
}

ZeroCertificate is_zero(const Scalar& s, ZeroPolicy policy) {
    ZeroCertificate cert;
    if (s.numeric()) {
        // A numeric scalar has no normal form; compare against tolerance.
        Real a = qboson::abs(s.numeric()->value);
        cert.zero = a < Real("1e-30");
        cert.exact = false;
        cert.samples.emplace_back(s.numeric()->q, a);
        return cert;
    }
    if (s.is_zero()) {
        cert.zero = true;
        cert.exact = true;
        return cert;
    }
    if (policy == ZeroPolicy::Exact) return cert;  // nonzero normal form
    Real tol("1e-30");
    cert.zero = true;
    for (const Real& q : zero_test_samples()) {
        Real a = s.abs_at(q);
        cert.samples.emplace_back(q, a);
        if (a >= tol) cert.zero = false;
    }
    return cert;
}

}  // namespace qboson
