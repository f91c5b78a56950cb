#include "qboson/relexpr.hpp"

#include <cctype>
#include <sstream>

namespace qboson {

RelExprPtr RelExpr::gen(std::string l) {
    auto e = std::make_shared<RelExpr>();
    e->kind = Kind::Gen;
    e->label = std::move(l);
    return e;
}

RelExprPtr RelExpr::scalar_mul(Rational c, RelExprPtr x) {
    auto e = std::make_shared<RelExpr>();
    e->kind = Kind::ScalarMul;
    e->coeff = std::move(c);
    e->a = std::move(x);
    return e;
}

RelExprPtr RelExpr::product(RelExprPtr x, RelExprPtr y) {
    auto e = std::make_shared<RelExpr>();
    e->kind = Kind::Product;
    e->a = std::move(x);
    e->b = std::move(y);
    return e;
}

RelExprPtr RelExpr::bracket(RelExprPtr x, RelExprPtr y, Deform d) {
    auto e = std::make_shared<RelExpr>();
    e->kind = Kind::Bracket;
    e->a = std::move(x);
    e->b = std::move(y);
    e->deform = d;
    return e;
}

RelExprPtr RelExpr::qbracket_h(int i) {
    auto e = std::make_shared<RelExpr>();
    e->kind = Kind::QBracketH;
    e->index = i;
    return e;
}

RelExprPtr RelExpr::qpow(std::string l, bool neg) {
    auto e = std::make_shared<RelExpr>();
    e->kind = Kind::QPow;
    e->label = std::move(l);
    e->negated = neg;
    return e;
}

RelExprPtr RelExpr::sum(RelExprPtr x, RelExprPtr y) {
    auto e = std::make_shared<RelExpr>();
    e->kind = Kind::Sum;
    e->a = std::move(x);
    e->b = std::move(y);
    return e;
}

RelExprPtr RelExpr::difference(RelExprPtr x, RelExprPtr y) {
    auto e = std::make_shared<RelExpr>();
    e->kind = Kind::Difference;
    e->a = std::move(x);
    e->b = std::move(y);
    return e;
}

RelExprPtr RelExpr::zero() {
    auto e = std::make_shared<RelExpr>();
    e->kind = Kind::Zero;
    return e;
}

bool ast_equal(const RelExprPtr& a, const RelExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case RelExpr::Kind::Gen: return a->label == b->label;
        case RelExpr::Kind::ScalarMul:
            return a->coeff == b->coeff && ast_equal(a->a, b->a);
        case RelExpr::Kind::Product:
        case RelExpr::Kind::Sum:
        case RelExpr::Kind::Difference:
            return ast_equal(a->a, b->a) && ast_equal(a->b, b->b);
        case RelExpr::Kind::Bracket:
            return a->deform == b->deform && ast_equal(a->a, b->a) &&
                   ast_equal(a->b, b->b);
        case RelExpr::Kind::QBracketH: return a->index == b->index;
        case RelExpr::Kind::QPow:
            return a->label == b->label && a->negated == b->negated;
        case RelExpr::Kind::Zero: return true;
    }
    return false;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }
    bool ident_ahead() { return std::isalpha((unsigned char)peek()); }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) {
            // '_' terminates an identifier only as a deformation suffix,
            // which is handled by the bracket parser; forbid it inside
            if (s[pos] == '_') break;
            ++pos;
        }
        if (start == pos) throw ParseError("expected identifier", pos);
        return s.substr(start, pos - start);
    }
    bool digit_ahead() { return std::isdigit((unsigned char)peek()); }
    Rational integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw ParseError("expected number", pos);
        return Rational(s.substr(start, pos - start));
    }
    Rational rational() {
        Rational num = integer();
        if (accept('/')) return num / integer();
        return num;
    }
};

struct Parser {
    Lexer lex;

    RelExprPtr parse_expr() {
        bool lead_neg = lex.accept('-');
        RelExprPtr acc = parse_term(lead_neg);
        while (true) {
            if (lex.accept('+'))
                acc = RelExpr::sum(acc, parse_term(false));
            else if (lex.peek() == '-' && !ahead_is_equals()) {
                lex.accept('-');
                acc = RelExpr::difference(acc, parse_term(false));
            } else {
                break;
            }
        }
        return acc;
    }

    bool ahead_is_equals() { return false; }

    RelExprPtr parse_term(bool negated) {
        std::optional<Rational> coeff;
        if (lex.digit_ahead()) coeff = lex.rational();
        std::vector<RelExprPtr> factors;
        while (true) {
            char c = lex.peek();
            if (c == '[' || c == '(' || std::isalpha((unsigned char)c))
                factors.push_back(parse_primary());
            else
                break;
        }
        if (factors.empty()) {
            if (!coeff) throw ParseError("empty term", lex.pos);
            // a bare number only makes sense as 0 in this DSL
            if (*coeff == 0) return RelExpr::zero();
            throw ParseError("bare scalar term (only 0 is allowed)", lex.pos);
        }
        RelExprPtr e = factors[0];
        for (size_t i = 1; i < factors.size(); ++i)
            e = RelExpr::product(e, factors[i]);
        if (coeff && *coeff != 1)
            e = RelExpr::scalar_mul(*coeff, e);
        if (negated) e = RelExpr::scalar_mul(Rational(-1), e);
        return e;
    }

    RelExprPtr parse_primary() {
        char c = lex.peek();
        if (c == '[') {
            lex.expect('[');
            RelExprPtr a = parse_expr();
            lex.expect(',');
            RelExprPtr b = parse_expr();
            lex.expect(']');
            Deform d = Deform::One;
            if (lex.pos < lex.s.size() && lex.s[lex.pos] == '_') {
                ++lex.pos;
                std::string tag = lex.ident();
                if (tag == "q")
                    d = Deform::Q;
                else if (tag == "qbar")
                    d = Deform::Qbar;
                else
                    throw ParseError("unknown deformation tag _" + tag, lex.pos);
            }
            return RelExpr::bracket(a, b, d);
        }
        if (c == '(') {
            lex.expect('(');
            RelExprPtr e = parse_expr();
            lex.expect(')');
            return e;
        }
        std::string id = lex.ident();
        if (id == "qbracket") {
            lex.expect('(');
            std::string h = lex.ident();
            lex.expect(')');
            if (h.size() < 2 || h[0] != 'h')
                throw ParseError("qbracket expects an h generator", lex.pos);
            return RelExpr::qbracket_h(std::stoi(h.substr(1)));
        }
        if (id == "qpow") {
            lex.expect('(');
            bool neg = lex.accept('-');
            std::string l = lex.ident();
            lex.expect(')');
            return RelExpr::qpow(l, neg);
        }
        return RelExpr::gen(id);
    }

    RelExprPtr parse_relation() {
        RelExprPtr e = parse_expr();
        lex.expect('=');
        lex.skip_ws();
        if (!lex.accept('0'))
            throw ParseError("relation must end in '= 0'", lex.pos);
        if (!lex.eof()) throw ParseError("trailing input", lex.pos);
        return e;
    }
};

void serialize(const RelExprPtr& e, std::ostream& os, bool in_product);

void serialize_factor(const RelExprPtr& e, std::ostream& os) {
    switch (e->kind) {
        case RelExpr::Kind::Sum:
        case RelExpr::Kind::Difference:
        case RelExpr::Kind::ScalarMul:
            os << "(";
            serialize(e, os, false);
            os << ")";
            break;
        default:
            serialize(e, os, true);
    }
}

void serialize(const RelExprPtr& e, std::ostream& os, bool in_product) {
    switch (e->kind) {
        case RelExpr::Kind::Gen: os << e->label; break;
        case RelExpr::Kind::Zero: os << "0"; break;
        case RelExpr::Kind::ScalarMul:
            if (in_product) os << "(";
            os << e->coeff << " ";
            serialize_factor(e->a, os);
            if (in_product) os << ")";
            break;
        case RelExpr::Kind::Product:
            serialize_factor(e->a, os);
            os << " ";
            serialize_factor(e->b, os);
            break;
        case RelExpr::Kind::Bracket:
            os << "[";
            serialize(e->a, os, false);
            os << ", ";
            serialize(e->b, os, false);
            os << "]";
            if (e->deform == Deform::Q) os << "_q";
            if (e->deform == Deform::Qbar) os << "_qbar";
            break;
        case RelExpr::Kind::QBracketH: os << "qbracket(h" << e->index << ")"; break;
        case RelExpr::Kind::QPow:
            os << "qpow(" << (e->negated ? "-" : "") << e->label << ")";
            break;
        case RelExpr::Kind::Sum:
        case RelExpr::Kind::Difference:
            serialize(e->a, os, false);
            os << (e->kind == RelExpr::Kind::Sum ? " + " : " - ");
            // a scalar-multiplied term reparses unambiguously as the next
            // term when the coefficient is positive
            if (e->b->kind == RelExpr::Kind::ScalarMul && e->b->coeff > 0)
                serialize(e->b, os, false);
            else
                serialize_factor(e->b, os);
            break;
    }
}

}  // namespace

RelExprPtr parse_relation(const std::string& text) {
    Parser p{Lexer{text}};
    return p.parse_relation();
}

std::string serialize_relation(const RelExprPtr& e) {
    std::ostringstream os;
    serialize(e, os, false);
    os << " = 0";
    return os.str();
}

}  // namespace qboson
