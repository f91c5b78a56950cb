#ifndef QBOSON_RELEXPR_HPP
#define QBOSON_RELEXPR_HPP

#include "qboson/numeric.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qboson {

// AST for the q-bracket relation DSL.  A relation is an expression
// asserted to vanish, written `expr = 0`.
//
// Grammar (see docs/relation-grammar.ebnf):
//   relation := expr "=" "0"
//   expr     := term { ("+" | "-") term }
//   term     := [ rational ] primary { primary }        (juxtaposition = product)
//   primary  := ident | bracket | "qbracket" "(" ident ")"
//             | "qpow" "(" ["-"] ident ")" | "(" expr ")"
//   bracket  := "[" expr "," expr "]" [ "_q" | "_qbar" ]
struct RelExpr;
using RelExprPtr = std::shared_ptr<const RelExpr>;

enum class Deform { One, Q, Qbar };

struct RelExpr {
    enum class Kind {
        Gen,        // generator label
        ScalarMul,  // rational * expr
        Product,    // a then b applied right-to-left (a*b)
        Bracket,    // [a, b]_x
        QBracketH,  // qbracket(h_i)
        QPow,       // qpow(label) or qpow(-label): diagonal q^{±eigenvalue}
        Sum,
        Difference,
        Zero,
    };

    Kind kind;
    std::string label;      // Gen / QPow
    int index = 0;          // QBracketH
    Rational coeff{0};      // ScalarMul
    bool negated = false;   // QPow sign
    Deform deform = Deform::One;
    RelExprPtr a, b;

    static RelExprPtr gen(std::string l);
    static RelExprPtr scalar_mul(Rational c, RelExprPtr e);
    static RelExprPtr product(RelExprPtr x, RelExprPtr y);
    static RelExprPtr bracket(RelExprPtr x, RelExprPtr y, Deform d);
    static RelExprPtr qbracket_h(int i);
    static RelExprPtr qpow(std::string l, bool neg);
    static RelExprPtr sum(RelExprPtr x, RelExprPtr y);
    static RelExprPtr difference(RelExprPtr x, RelExprPtr y);
    static RelExprPtr zero();
};

bool ast_equal(const RelExprPtr& a, const RelExprPtr& b);

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg), position(pos) {}
};

// Parses `expr = 0`.  Whitespace-insensitive.  Generator indices are
// validated at evaluation time, not here.
RelExprPtr parse_relation(const std::string& text);

// Canonical text form; parse_relation(serialize_relation(e)) reparses to
// a structurally equal AST.
std::string serialize_relation(const RelExprPtr& e);

}  // namespace qboson

#endif
