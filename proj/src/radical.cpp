#include "qboson/radical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qboson {

namespace {

using TermKey = std::tuple<std::vector<int>, Rational, bool>;

TermKey key_of(const RadTerm& t) {
    return {t.radicand, t.rad_rational, t.imag};
}

// Normalizes sqrt(r * prod [k]) into a single RadTerm (multiplied into
// `out`), assuming r > 0 and all indices positive.
RadTerm normalize_sqrt(const Rational& r, std::vector<int>& ks) {
    RadTerm t;
    t.coeff = QLaurent(1);
    std::sort(ks.begin(), ks.end());
    for (size_t i = 0; i < ks.size();) {
        if (i + 1 < ks.size() && ks[i] == ks[i + 1]) {
            t.coeff *= qint(ks[i]);  // sqrt([k])^2 = [k]
            i += 2;
        } else {
            if (ks[i] != 1) t.radicand.push_back(ks[i]);
            ++i;
        }
    }
    // sqrt(a/b) = sqrt(a*b)/b, then pull the square part out of a*b.
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    auto [s, f] = extract_square(num * den);
    t.coeff *= Rational(s, den);
    t.rad_rational = Rational(f);
    return t;
}

}  // namespace

std::pair<BigInt, BigInt> extract_square(const BigInt& m) {
    if (m <= 0) throw std::domain_error("extract_square: nonpositive input");
    BigInt rest = m, s = 1, f = 1;
    for (BigInt d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            int e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) s *= d;
            if (e % 2) f *= d;
        }
    }
    f *= rest;
    return {s, f};
}

QRadical::QRadical(QLaurent l) {
    if (!l.is_zero()) {
        RadTerm t;
        t.coeff = std::move(l);
        terms_.push_back(std::move(t));
    }
}

QRadical QRadical::sqrt_qint_product(const Rational& r,
                                     std::vector<int> qint_indices) {
    if (r == 0) return QRadical();
    bool neg = r < 0;
    Rational ar = neg ? Rational(-r) : r;
    std::vector<int> ks;
    ks.reserve(qint_indices.size());
    for (int k : qint_indices) {
        if (k == 0) return QRadical();
        if (k < 0) {
            neg = !neg;
            k = -k;
        }
        ks.push_back(k);
    }
    RadTerm t = normalize_sqrt(ar, ks);
    t.imag = neg;
    QRadical out;
    out.insert_term(std::move(t));
    return out;
}

bool QRadical::is_pure_laurent() const {
    for (const auto& t : terms_)
        if (!t.radicand.empty() || t.rad_rational != 1 || t.imag) return false;
    return true;
}

std::optional<QLaurent> QRadical::as_laurent() const {
    if (!is_pure_laurent()) return std::nullopt;
    QLaurent acc;
    for (const auto& t : terms_) acc += t.coeff;
    return acc;
}

void QRadical::insert_term(RadTerm t) {
    if (t.coeff.is_zero()) return;
    auto pos = std::lower_bound(
        terms_.begin(), terms_.end(), t,
        [](const RadTerm& a, const RadTerm& b) { return key_of(a) < key_of(b); });
    if (pos != terms_.end() && key_of(*pos) == key_of(t)) {
        pos->coeff += t.coeff;
        if (pos->coeff.is_zero()) terms_.erase(pos);
    } else {
        terms_.insert(pos, std::move(t));
    }
}

QRadical QRadical::operator-() const {
    QRadical r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

QRadical operator+(const QRadical& a, const QRadical& b) {
    QRadical r = a;
    for (const auto& t : b.terms_) r.insert_term(t);
    return r;
}

QRadical operator-(const QRadical& a, const QRadical& b) {
    QRadical r = a;
    for (const auto& t : b.terms_) {
        RadTerm nt = t;
        nt.coeff = -nt.coeff;
        r.insert_term(std::move(nt));
    }
    return r;
}

QRadical operator*(const QRadical& a, const QRadical& b) {
    QRadical r;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            // Merge the two radicands; shared factors leave the root.
            std::vector<int> ks = ta.radicand;
            ks.insert(ks.end(), tb.radicand.begin(), tb.radicand.end());
            RadTerm t =
                normalize_sqrt(ta.rad_rational * tb.rad_rational, ks);
            t.coeff *= ta.coeff * tb.coeff;
            t.imag = ta.imag != tb.imag;
            if (ta.imag && tb.imag) t.coeff *= Rational(-1);
            r.insert_term(std::move(t));
        }
    return r;
}

QRadical& QRadical::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

bool operator==(const QRadical& a, const QRadical& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        const RadTerm &x = a.terms_[i], &y = b.terms_[i];
        if (x.radicand != y.radicand || x.rad_rational != y.rad_rational ||
            x.imag != y.imag || !(x.coeff == y.coeff))
            return false;
    }
    return true;
}

QRadical QRadical::conjugate() const {
    QRadical r = *this;
    for (auto& t : r.terms_)
        if (t.imag) t.coeff = -t.coeff;
    return r;
}

Complex QRadical::eval(const Real& q) const {
    using boost::multiprecision::sqrt;
    Complex acc;
    for (const auto& t : terms_) {
        Real rad = to_real(t.rad_rational);
        for (int k : t.radicand) rad *= qint(k).eval(q);
        Real v = t.coeff.eval(q) * sqrt(rad);
        if (t.imag)
            acc.im += v;
        else
            acc.re += v;
    }
    return acc;
}

std::string QRadical::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")";
        if (t.imag) os << "*i";
        if (t.rad_rational != 1 || !t.radicand.empty()) {
            os << "*sqrt(" << t.rad_rational;
            for (int k : t.radicand) os << "*[" << k << "]";
            os << ")";
        }
    }
    return os.str();
}

}  // namespace qboson
