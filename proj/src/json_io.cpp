#include "qboson/json_io.hpp"

#include <sstream>

namespace qboson {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << "/"
       << boost::multiprecision::denominator(r);
    return os.str();
}

namespace {

Json laurent_to_json(const QLaurent& l) {
    Json terms = Json::object();
    for (const auto& [exp, c] : l.terms())
        terms[std::to_string(exp)] = rational_str(c);
    return Json{{"laurent", terms}};
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    if (const QLaurent* l = s.laurent()) return laurent_to_json(*l);
    if (const QRadical* r = s.radical()) {
        Json terms = Json::array();
        for (const RadTerm& t : r->terms()) {
            Json jt{{"coeff", laurent_to_json(t.coeff)},
                    {"radicand", t.radicand},
                    {"rad_rational", rational_str(t.rad_rational)}};
            if (t.imag) jt["imag"] = true;
            terms.push_back(std::move(jt));
        }
        return Json{{"radical", terms}};
    }
    const QNumeric& n = *s.numeric();
    return Json{{"numeric",
                 Json{{"re", to_decimal_string(n.value.re)},
                      {"im", to_decimal_string(n.value.im)},
                      {"q", to_decimal_string(n.q)}}}};
}

Json basis_to_json(const FockBasis& b) {
    Json out = Json::array();
    for (int j = 0; j < b.size(); ++j) out.push_back(b.state(j).l);
    return out;
}

Json realization_to_json(const Realization& r) {
    Json meta{{"tool", "qboson"},
              {"version", kToolVersion},
              {"kind", kind_name(r.kind)},
              {"n", r.n},
              {"p", rational_str(r.p)},
              {"trunc", r.L},
              {"backend", backend_name(r.backend)},
              {"normalization",
               r.norm == Normalization::Monomial ? "monomial" : "orthonormal"}};
    if (r.backend == Backend::Numeric) meta["q"] = to_decimal_string(r.q);

    Json ops = Json::object();
    for (const auto& [label, op] : r.ops) {
        Json cols = Json::object();
        for (const auto& [j, col] : op.columns()) {
            Json entries = Json::array();
            for (const auto& [i, v] : col)
                entries.push_back(Json::array({i, scalar_to_json(v)}));
            cols[std::to_string(j)] = std::move(entries);
        }
        Json jop = Json::object();
        if (op.degree_shift())
            jop["degree_shift"] = *op.degree_shift();
        else
            jop["degree_shift"] = nullptr;
        jop["cols"] = std::move(cols);
        ops[label] = std::move(jop);
    }
    return Json{{"meta", meta}, {"basis", basis_to_json(*r.basis)},
                {"operators", ops}};
}

Json relation_report_to_json(const RelationReport& rep) {
    Json out{{"relation", rep.relation},
             {"verdict", verdict_name(rep.verdict)},
             {"guard", rep.guard},
             {"dim_checked", rep.dim_checked}};
    if (rep.sampled_fallback) {
        out["sampled_fallback"] = true;
        out["samples_used"] = rep.samples_used;
    }
    if (!rep.residual.empty()) out["residual"] = rep.residual;
    if (!rep.witness.empty()) out["witness"] = rep.witness;
    return out;
}

Json suite_report_to_json(const std::vector<RelationReport>& reps) {
    int passed = 0;
    Json list = Json::array();
    for (const RelationReport& rep : reps) {
        passed += rep.passed();
        list.push_back(relation_report_to_json(rep));
    }
    return Json{{"total", (int)reps.size()},
                {"passed", passed},
                {"all_passed", passed == (int)reps.size()},
                {"relations", list}};
}

Json weight_report_to_json(const WeightReport& rep) {
    Json rows = Json::array();
    for (size_t j = 0; j < rep.states.size(); ++j) {
        Json eig = Json::array();
        for (const Rational& x : rep.table[j]) eig.push_back(rational_str(x));
        rows.push_back(Json{{"state", rep.states[j].l}, {"h", eig}});
    }
    return Json{{"weights", rows}};
}

Json invariance_report_to_json(const InvarianceReport& rep) {
    Json gens = Json::array();
    for (const GeneratorVerdict& v : rep.per_generator) {
        Json g{{"generator", v.label}, {"invariant", v.invariant}};
        if (!v.witness.empty()) g["witness"] = v.witness;
        gens.push_back(std::move(g));
    }
    return Json{{"subspace", rep.kind == Subspace::F0 ? "F0" : "F1"},
                {"max_col_degree", rep.max_col_degree},
                {"all_invariant", rep.all_invariant()},
                {"generators", gens}};
}

Json unitarity_report_to_json(const UnitarityReport& rep) {
    Json out{{"expect_fail", rep.expect_fail},
             {"pass", rep.pass},
             {"block_dim", rep.block_dim},
             {"max_deviation", to_decimal_string(rep.deviation)}};
    if (!rep.witness.empty()) out["witness"] = rep.witness;
    return out;
}

Json irreducibility_report_to_json(const IrreducibilityReport& rep) {
    Json out{{"probe_pass", rep.probe_pass},
             {"coefficients_checked", rep.coefficients_checked},
             {"min_abs", to_decimal_string(rep.min_abs)}};
    if (!rep.witness.empty()) out["witness"] = rep.witness;
    return out;
}

Json classical_report_to_json(const ClassicalLimitReport& rep) {
    Json out{{"pass", rep.pass}, {"entries_checked", rep.entries_checked}};
    if (!rep.witness.empty()) out["witness"] = rep.witness;
    return out;
}

std::string matrix_market(const SparseOp& op, const Real& q) {
    int nnz = 0;
    for (const auto& [j, col] : op.columns()) nnz += (int)col.size();
    std::ostringstream os;
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << op.basis()->size() << " " << op.basis()->size() << " " << nnz << "\n";
    for (const auto& [j, col] : op.columns())
        for (const auto& [i, v] : col) {
            const QNumeric* num = v.numeric();
            if (!num)
                throw std::invalid_argument(
                    "matrix-market export needs the numeric backend");
            if (num->value.im != 0)
                throw std::invalid_argument(
                    "matrix-market export supports real entries only");
            (void)q;
            os << (i + 1) << " " << (j + 1) << " "
               << to_decimal_string(num->value.re) << "\n";
        }
    return os.str();
}

std::string suite_report_text(const std::vector<RelationReport>& reps) {
    std::ostringstream os;
    for (const RelationReport& rep : reps) {
        os << (rep.passed() ? "PASS" : "FAIL") << " ["
           << verdict_name(rep.verdict) << "] " << rep.relation
           << "  (guard " << rep.guard << ", dim " << rep.dim_checked << ")";
        if (!rep.residual.empty()) os << "  residual " << rep.residual;
        if (!rep.witness.empty()) os << "  witness: " << rep.witness;
        os << "\n";
    }
    return os.str();
}

}  // namespace qboson
