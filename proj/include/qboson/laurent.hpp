#ifndef QBOSON_LAURENT_HPP
#define QBOSON_LAURENT_HPP

#include "qboson/numeric.hpp"

#include <map>
#include <optional>
#include <string>

namespace qboson {

// Laurent polynomial in q with rational coefficients, kept in normal form
// (no stored zero coefficients).
class QLaurent {
  public:
    QLaurent() = default;
    explicit QLaurent(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    QLaurent(long c) : QLaurent(Rational(c)) {}

    static QLaurent monomial(int exponent, const Rational& c = 1) {
        QLaurent r;
        if (c != 0) r.terms_[exponent] = c;
        return r;
    }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // q^k with unit coefficient, if this is such a monomial.
    std::optional<int> as_unit_monomial() const {
        if (terms_.size() == 1 && terms_.begin()->second == 1)
            return terms_.begin()->first;
        return std::nullopt;
    }
    std::optional<Rational> as_constant() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_.begin()->first == 0)
            return terms_.begin()->second;
        return std::nullopt;
    }

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent operator-() const;
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
    QLaurent& operator*=(const Rational& c);
    QLaurent& operator/=(const Rational& c);

    friend bool operator==(const QLaurent& a, const QLaurent& b) {
        return a.terms_ == b.terms_;
    }

    // Substitute q -> value (exact for rational arguments via eval_at_one).
    Real eval(const Real& q) const;
    Rational eval_at_one() const;

    std::string str() const;

  private:
    std::map<int, Rational> terms_;
};

// The q-integer [k] = (q^k - q^{-k})/(q - q^{-1}) as a Laurent polynomial:
// q^{k-1} + q^{k-3} + ... + q^{-(k-1)} for k > 0, zero for k = 0, and
// -[−k] for k < 0.
QLaurent qint(int k);

}  // namespace qboson

#endif
