#include "qboson/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qboson {

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                r.terms_[ea + eb] = ca * cb;
            } else {
                it->second += ca * cb;
            }
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

QLaurent& QLaurent::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

QLaurent& QLaurent::operator/=(const Rational& c) {
    if (c == 0) throw std::domain_error("QLaurent: division by zero");
    for (auto& [e, v] : terms_) v /= c;
    return *this;
}

Real QLaurent::eval(const Real& q) const {
    using boost::multiprecision::pow;
    Real acc(0);
    for (const auto& [e, c] : terms_) acc += to_real(c) * pow(q, e);
    return acc;
}

Rational QLaurent::eval_at_one() const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        if (!first) os << (c < 0 ? " - " : " + ");
        Rational a = (!first && c < 0) ? Rational(-c) : c;
        first = false;
        int e = it->first;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q^" << e;
        }
    }
    return os.str();
}

QLaurent qint(int k) {
    if (k == 0) return QLaurent();
    if (k < 0) return -qint(-k);
    QLaurent r;
    for (int e = k - 1; e >= -(k - 1); e -= 2) r += QLaurent::monomial(e);
    return r;
}

}  // namespace qboson
