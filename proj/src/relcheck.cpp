#include "qboson/relcheck.hpp"

#include <fstream>
#include <sstream>

namespace qboson {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ExactPass: return "exact-pass";
        case Verdict::SampledPass: return "sampled-pass";
        case Verdict::Fail: return "fail";
        case Verdict::InsufficientTruncation: return "insufficient-truncation";
    }
    return "?";
}

namespace {

// Reads the integer eigenvalue of a diagonal operator entry (exact
// backends); missing entries are zero.
int diag_exponent(const Scalar& s) {
    QLaurent l;
    if (auto* pl = s.laurent()) {
        l = *pl;
    } else if (auto* pr = s.radical()) {
        auto as_l = pr->as_laurent();
        if (!as_l) throw EvalError("diagonal entry is not rational");
        l = *as_l;
    } else {
        throw EvalError("expected an exact diagonal entry");
    }
    auto c = l.as_constant();
    if (!c) throw EvalError("diagonal entry is not constant in q");
    Rational r = *c;
    if (boost::multiprecision::denominator(r) != 1)
        throw EvalError("diagonal exponent is not an integer");
    return boost::multiprecision::numerator(r).convert_to<int>();
}

Scalar deform_scalar(Deform d, const EvalContext& ctx) {
    switch (d) {
        case Deform::One: return Scalar::from_rational(1, ctx.backend, ctx.q);
        case Deform::Q: return Scalar::q_monomial(1, ctx.backend, ctx.q);
        case Deform::Qbar: return Scalar::q_monomial(-1, ctx.backend, ctx.q);
    }
    throw std::logic_error("bad deform");
}

const SparseOp& lookup(const EvalContext& ctx, const std::string& label) {
    auto it = ctx.ops->find(label);
    if (it == ctx.ops->end()) throw EvalError("unknown generator: " + label);
    return it->second;
}

}  // namespace

EvalResult eval_expr(const RelExprPtr& ast, const EvalContext& ctx) {
    switch (ast->kind) {
        case RelExpr::Kind::Gen: {
            const SparseOp& op = lookup(ctx, ast->label);
            int net = op.degree_shift().value_or(0);
            return {op, net, std::max(0, net)};
        }
        case RelExpr::Kind::Zero:
            return {SparseOp(ctx.basis, 0), 0, 0};
        case RelExpr::Kind::ScalarMul: {
            EvalResult a = eval_expr(ast->a, ctx);
            return {a.op.scaled(Scalar::from_rational(ast->coeff, ctx.backend, ctx.q)),
                    a.net_shift, a.guard};
        }
        case RelExpr::Kind::Product: {
            EvalResult a = eval_expr(ast->a, ctx);
            EvalResult b = eval_expr(ast->b, ctx);
            return {a.op.compose(b.op), a.net_shift + b.net_shift,
                    std::max(b.guard, b.net_shift + a.guard)};
        }
        case RelExpr::Kind::Bracket: {
            EvalResult a = eval_expr(ast->a, ctx);
            EvalResult b = eval_expr(ast->b, ctx);
            SparseOp op = q_commutator(a.op, b.op, deform_scalar(ast->deform, ctx));
            int g_ab = std::max(b.guard, b.net_shift + a.guard);
            int g_ba = std::max(a.guard, a.net_shift + b.guard);
            return {std::move(op), a.net_shift + b.net_shift, std::max(g_ab, g_ba)};
        }
        case RelExpr::Kind::QBracketH: {
            // (q^{h_i} - qbar^{h_i}) / (q - qbar) from the stored
            // exponential diagonals
            std::string si = std::to_string(ast->index);
            const SparseOp& qh = lookup(ctx, "qh" + si);
            const SparseOp& qhbar = lookup(ctx, "qhbar" + si);
            SparseOp out(ctx.basis, 0);
            for (int s = 0; s < ctx.basis->size(); ++s) {
                if (ctx.backend == Backend::Numeric) {
                    Complex v = qh.entry(s, s).eval(ctx.q);
                    Complex vbar = qhbar.entry(s, s).eval(ctx.q);
                    Complex num = v - vbar;
                    Real den = ctx.q - 1 / ctx.q;
                    if (den == 0) throw EvalError("qbracket undefined at q = 1");
                    out.set_entry(s, s,
                                  Scalar(QNumeric{Complex(num.re / den, num.im / den),
                                                  ctx.q}));
                } else {
                    Scalar e = qh.entry(s, s);
                    QLaurent mono = e.laurent()
                                        ? *e.laurent()
                                        : e.radical()->as_laurent().value();
                    auto k = mono.as_unit_monomial();
                    if (!k && mono.is_zero())
                        throw EvalError("qbracket of a vanishing diagonal");
                    if (!k) throw EvalError("q^h diagonal is not a monomial");
                    Scalar val = ctx.backend == Backend::ExactLaurent
                                     ? Scalar(qint(*k))
                                     : Scalar(QRadical(qint(*k)));
                    out.set_entry(s, s, val);
                }
            }
            return {std::move(out), 0, 0};
        }
        case RelExpr::Kind::QPow: {
            const SparseOp& base = lookup(ctx, ast->label);
            if (!base.is_diagonal())
                throw EvalError("qpow of a non-diagonal operator");
            int sign = ast->negated ? -1 : +1;
            SparseOp out(ctx.basis, 0);
            for (int s = 0; s < ctx.basis->size(); ++s) {
                if (ctx.backend == Backend::Numeric) {
                    Complex v = base.entry(s, s).eval(ctx.q);
                    if (!(v.im == 0))
                        throw EvalError("qpow of a complex diagonal");
                    out.set_entry(
                        s, s,
                        Scalar(QNumeric{Complex(qpow_value(sign * v.re, ctx.q)),
                                        ctx.q}));
                } else {
                    int e = diag_exponent(base.entry(s, s));
                    out.set_entry(s, s,
                                  Scalar::q_monomial(sign * e, ctx.backend, ctx.q));
                }
            }
            return {std::move(out), 0, 0};
        }
        case RelExpr::Kind::Sum:
        case RelExpr::Kind::Difference: {
            EvalResult a = eval_expr(ast->a, ctx);
            EvalResult b = eval_expr(ast->b, ctx);
            SparseOp op = ast->kind == RelExpr::Kind::Sum ? a.op + b.op
                                                          : a.op - b.op;
            return {std::move(op), std::max(a.net_shift, b.net_shift),
                    std::max(a.guard, b.guard)};
        }
    }
    throw std::logic_error("bad AST node");
}

RelationReport check_relation(const RelExprPtr& ast, const EvalContext& ctx) {
    RelationReport rep;
    rep.relation = serialize_relation(ast);
    EvalResult r = eval_expr(ast, ctx);
    rep.guard = ctx.lossless ? 0 : r.guard;
    if (ctx.L < rep.guard) {
        rep.verdict = Verdict::InsufficientTruncation;
        return rep;
    }
    int max_deg = ctx.L - rep.guard;
    rep.dim_checked = ctx.basis->dim_up_to_degree(max_deg);

    if (ctx.backend == Backend::Numeric) {
        Real worst = r.op.max_abs_on_degrees(max_deg, ctx.q);
        rep.residual = to_decimal_string(worst);
        if (worst < Real("1e-10")) {
            rep.verdict = Verdict::SampledPass;
        } else {
            rep.verdict = Verdict::Fail;
            auto w = r.op.witness_on_degrees(max_deg);
            if (w) {
                std::ostringstream os;
                os << "entry (" << std::get<0>(*w) << "," << std::get<1>(*w)
                   << ") = " << std::get<2>(*w).str();
                rep.witness = os.str();
            }
        }
        return rep;
    }

    if (r.op.is_zero_on_degrees(max_deg)) {
        rep.verdict = Verdict::ExactPass;
        return rep;
    }
    if (ctx.backend == Backend::ExactRadical) {
        // Nonzero normal form: fall back to the fixed sample set.  Distinct
        // radicals are assumed independent, so this is reported as
        // "zero (sampled)", never as exact.
        Real worst(0);
        int samples = 0;
        for (const Real& q : zero_test_samples()) {
            Real a = r.op.max_abs_on_degrees(max_deg, q);
            if (a > worst) worst = a;
            ++samples;
        }
        rep.samples_used = samples;
        rep.residual = to_decimal_string(worst);
        if (worst < Real("1e-30")) {
            rep.verdict = Verdict::SampledPass;
            rep.sampled_fallback = true;
            return rep;
        }
    }
    rep.verdict = Verdict::Fail;
    auto w = r.op.witness_on_degrees(max_deg);
    if (w) {
        std::ostringstream os;
        os << "entry (" << std::get<0>(*w) << "," << std::get<1>(*w)
           << ") = " << std::get<2>(*w).str();
        rep.witness = os.str();
    }
    return rep;
}

RelationReport check_relation_text(const std::string& text,
                                   const EvalContext& ctx) {
    RelationReport rep = check_relation(parse_relation(text), ctx);
    rep.relation = text;
    return rep;
}

std::vector<std::string> standard_suite(int n) {
    std::vector<std::string> out;
    auto gen = [](const char* s, int i) {
        return std::string(s) + std::to_string(i);
    };
    // Cartan relations
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int c = 2 * (i == j) - (i == j - 1) - (i - 1 == j);
            std::ostringstream ea, fa;
            ea << "[" << gen("h", i) << ", " << gen("e", j) << "]";
            fa << "[" << gen("h", i) << ", " << gen("f", j) << "]";
            auto coeff = [](int v) {
                return v == 1 ? std::string() : std::to_string(v) + " ";
            };
            if (c > 0) {
                ea << " - " << coeff(c) << gen("e", j);
                fa << " + " << coeff(c) << gen("f", j);
            } else if (c < 0) {
                ea << " + " << coeff(-c) << gen("e", j);
                fa << " - " << coeff(-c) << gen("f", j);
            }
            out.push_back(ea.str() + " = 0");
            out.push_back(fa.str() + " = 0");
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::ostringstream os;
            os << "[" << gen("e", i) << ", " << gen("f", j) << "]";
            if (i == j) os << " - qbracket(h" << i << ")";
            out.push_back(os.str() + " = 0");
        }
    // Serre relations
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (std::abs(i - j) == 1) continue;
            out.push_back("[" + gen("e", i) + ", " + gen("e", j) + "] = 0");
            out.push_back("[" + gen("f", i) + ", " + gen("f", j) + "] = 0");
        }
    for (int i = 1; i <= n; ++i)
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > n) continue;
            for (const char* s : {"e", "f"}) {
                std::string gi = gen(s, i), gj = gen(s, j);
                out.push_back("[" + gi + ", [" + gi + ", " + gj +
                              "]_qbar]_q = 0");
                out.push_back("[" + gi + ", [" + gi + ", " + gj +
                              "]_q]_qbar = 0");
            }
        }
    return out;
}

std::vector<std::string> oscillator_suite(int n) {
    std::vector<std::string> out;
    auto lbl = [](const char* stem, int i, const char* suffix = "") {
        return std::string(stem) + std::to_string(i) + suffix;
    };
    for (int i = 1; i <= n; ++i) {
        out.push_back("[" + lbl("atilde", i, "m") + ", " + lbl("atilde", i, "p") +
                      "]_q - qpow(-" + lbl("Ntilde", i) + ") = 0");
        out.push_back("[" + lbl("Ntilde", i) + ", " + lbl("atilde", i, "p") +
                      "] - " + lbl("atilde", i, "p") + " = 0");
        out.push_back("[" + lbl("Ntilde", i) + ", " + lbl("atilde", i, "m") +
                      "] + " + lbl("atilde", i, "m") + " = 0");
    }
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            out.push_back("[" + lbl("atilde", i, "p") + ", " +
                          lbl("atilde", k, "p") + "] = 0");
            out.push_back("[" + lbl("atilde", i, "m") + ", " +
                          lbl("atilde", k, "m") + "] = 0");
            out.push_back("[" + lbl("Ntilde", i) + ", " + lbl("Ntilde", k) +
                          "] = 0");
            out.push_back("[" + lbl("atilde", i, "m") + ", " +
                          lbl("atilde", k, "p") + "] = 0");
            out.push_back("[" + lbl("atilde", k, "m") + ", " +
                          lbl("atilde", i, "p") + "] = 0");
            for (const char* suffix : {"p", "m"}) {
                out.push_back("[" + lbl("Ntilde", i) + ", " +
                              lbl("atilde", k, suffix) + "] = 0");
                out.push_back("[" + lbl("Ntilde", k) + ", " +
                              lbl("atilde", i, suffix) + "] = 0");
            }
        }
    return out;
}

std::vector<RelationReport> run_suite(const std::vector<std::string>& corpus,
                                      const EvalContext& ctx) {
    std::vector<RelationReport> out;
    out.reserve(corpus.size());
    for (const auto& text : corpus) out.push_back(check_relation_text(text, ctx));
    return out;
}

std::vector<std::string> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

void save_corpus(const std::vector<std::string>& corpus,
                 const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write corpus file: " + path);
    for (const auto& line : corpus) out << line << "\n";
}

void mutate_scale_by_q(Realization& r, const std::string& label) {
    r.ops.at(label) =
        r.ops.at(label).scaled(Scalar::q_monomial(1, r.backend, r.q));
}

}  // namespace qboson
