#ifndef QBOSON_SCALAR_HPP
#define QBOSON_SCALAR_HPP

#include "qboson/radical.hpp"

#include <variant>
#include <vector>

namespace qboson {

enum class Backend { ExactLaurent, ExactRadical, Numeric };

const char* backend_name(Backend b);
Backend backend_from_name(const std::string& name);

// Fixed-q numeric scalar.  q is carried along so that mixed-q arithmetic
// can be rejected.
struct QNumeric {
    Complex value;
    Real q{0};
};

// One scalar coefficient in any of the three backends.  Exact Laurent
// values promote to radicals when combined with them; numeric values only
// combine with numeric values at the same q.
class Scalar {
  public:
    Scalar() : v_(QLaurent()) {}
    explicit Scalar(QLaurent l) : v_(std::move(l)) {}
    explicit Scalar(QRadical r) : v_(std::move(r)) {}
    explicit Scalar(QNumeric n) : v_(std::move(n)) {}

    static Scalar zero(Backend b, const Real& q = Real(0));
    static Scalar from_rational(const Rational& c, Backend b,
                                const Real& q = Real(0));
    static Scalar q_monomial(int exponent, Backend b, const Real& q = Real(0));

    Backend backend() const;
    bool is_zero() const;  // normal-form zero (exact) / exact 0 (numeric)

    const QLaurent* laurent() const { return std::get_if<QLaurent>(&v_); }
    const QRadical* radical() const { return std::get_if<QRadical>(&v_); }
    const QNumeric* numeric() const { return std::get_if<QNumeric>(&v_); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    Complex eval(const Real& q) const;  // numeric: must match stored q
    Real abs_at(const Real& q) const { return qboson::abs(eval(q)); }

    std::string str() const;

  private:
    std::variant<QLaurent, QRadical, QNumeric> v_;
};

enum class ZeroPolicy { Exact, Sampled };

struct ZeroCertificate {
    bool zero = false;
    bool exact = false;  // true when decided by normal form alone
    std::vector<std::pair<Real, Real>> samples;  // (q, |value|)
};

// Fixed, documented sample set used by all sampled zero tests:
// {1/2, 7/10, 9/10, 11/10, 3/2, 2, 5/2, e^{1/10}}.
std::vector<Real> zero_test_samples();

// Trusted zero test.  Exact policy decides by normal form.  Sampled policy
// evaluates at the fixed sample set and compares against 1e-30; for a
// radical whose normal form is nonzero this can only ever report
// "zero (sampled)", never an exact zero.
ZeroCertificate is_zero(const Scalar& s, ZeroPolicy policy);

}  // namespace qboson

#endif
