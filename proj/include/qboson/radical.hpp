#ifndef QBOSON_RADICAL_HPP
#define QBOSON_RADICAL_HPP

#include "qboson/laurent.hpp"

#include <vector>

namespace qboson {

// One summand of a QRadical:
//   coeff * i^{imag} * sqrt(rad_rational * prod_{k in radicand} [k])
// Normal form: radicand is a sorted list of distinct integers >= 2
// (squares extracted into coeff, [1] = 1 dropped), rad_rational is a
// positive rational that is square-free in numerator and denominator.
struct RadTerm {
    QLaurent coeff;
    std::vector<int> radicand;
    Rational rad_rational{1};
    bool imag = false;
};

// Sum of radical terms over the Laurent ring.  Terms with identical
// (radicand, rad_rational, imag) keys are merged; zero coefficients drop.
class QRadical {
  public:
    QRadical() = default;
    explicit QRadical(QLaurent l);
    explicit QRadical(const Rational& c) : QRadical(QLaurent(c)) {}

    // sqrt(r * prod [k]) over the given q-integer indices.  Negative r or
    // negative indices flip the sign under the root ([−k] = −[k]); an
    // overall negative radicand is represented with the imaginary flag.
    // A zero factor (r = 0 or any k = 0) gives zero.
    static QRadical sqrt_qint_product(const Rational& r,
                                      std::vector<int> qint_indices);
    // sqrt(r) for rational r (no q-integer factors).
    static QRadical sqrt_rational(const Rational& r) {
        return sqrt_qint_product(r, {});
    }

    const std::vector<RadTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_pure_laurent() const;
    // Defined only when every term has an empty radicand, unit
    // rad_rational and no imaginary flag.
    std::optional<QLaurent> as_laurent() const;

    QRadical operator-() const;
    friend QRadical operator+(const QRadical& a, const QRadical& b);
    friend QRadical operator-(const QRadical& a, const QRadical& b);
    friend QRadical operator*(const QRadical& a, const QRadical& b);
    QRadical& operator+=(const QRadical& o) { return *this = *this + o; }
    QRadical& operator-=(const QRadical& o) { return *this = *this - o; }
    QRadical& operator*=(const QRadical& o) { return *this = *this * o; }
    QRadical& operator*=(const Rational& c);

    friend bool operator==(const QRadical& a, const QRadical& b);

    QRadical conjugate() const;  // flips the sign of imaginary terms

    Complex eval(const Real& q) const;

    std::string str() const;

  private:
    void insert_term(RadTerm t);
    std::vector<RadTerm> terms_;  // sorted by (radicand, rad_rational, imag)
};

// m = s^2 * f with f square-free; returns (s, f).  m must be positive.
std::pair<BigInt, BigInt> extract_square(const BigInt& m);

}  // namespace qboson

#endif
