#include "qboson/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace qboson {

namespace {

const char* kTinyTol = "1e-30";

bool entry_negligible(const Scalar& s, Backend backend, const Real& q) {
    if (backend == Backend::Numeric) return s.abs_at(q) <= Real(kTinyTol);
    return is_zero(s, ZeroPolicy::Exact).zero;
}

std::string elem_str(const std::string& label, const FockBasis& b, int row,
                     int col, const std::string& value) {
    std::ostringstream os;
    os << label << " |" << b.state(col).str() << "> -> |" << b.state(row).str()
       << ">  coeff " << value;
    return os.str();
}

int require_small_int(const Rational& p, const char* what) {
    if (boost::multiprecision::denominator(p) != 1) {
        std::ostringstream os;
        os << what << " requires an integer p, got " << p;
        throw AnalysisError(os.str());
    }
    return boost::multiprecision::numerator(p).convert_to<int>();
}

}  // namespace

// ---------------------------------------------------------------- weights

WeightReport weights(const Realization& r) {
    WeightReport out;
    const FockBasis& b = *r.basis;
    for (int j = 0; j < b.size(); ++j) out.states.push_back(b.state(j));
    out.table.assign(b.size(), std::vector<Rational>(r.n));

    for (int i = 1; i <= r.n; ++i) {
        const SparseOp& h = r.op("h" + std::to_string(i));
        if (!h.is_diagonal())
            throw AnalysisError("h" + std::to_string(i) +
                                " image is not diagonal (builder bug)");
        for (int j = 0; j < b.size(); ++j) {
            Rational expect = h_eigenvalue(b.state(j), i, r.p);
            Scalar d = h.entry(j, j);
            bool ok;
            if (r.backend == Backend::Numeric)
                ok = abs(d.eval(r.q) - Complex(to_real(expect))) <= Real(kTinyTol);
            else
                ok = d == Scalar::from_rational(expect, r.backend, r.q);
            if (!ok)
                throw AnalysisError("h" + std::to_string(i) +
                                    " diagonal disagrees with the closed-form "
                                    "eigenvalue at |" +
                                    b.state(j).str() + ">");
            out.table[j][i - 1] = expect;
        }
    }
    return out;
}

// ------------------------------------------------------------- invariance

std::pair<int, int> SubspaceSelector::range(const FockBasis& b) const {
    int cut = b.dim_up_to_degree(std::min(p, b.L()));
    if (kind == Subspace::F0) return {0, cut};
    return {cut, b.size()};
}

BigInt f0_dimension(int n, int p) {
    BigInt num = 1, den = 1;
    for (int k = 1; k <= n; ++k) {
        num *= p + k;
        den *= k;
    }
    return num / den;
}

bool InvarianceReport::all_invariant() const {
    return std::all_of(per_generator.begin(), per_generator.end(),
                       [](const GeneratorVerdict& v) { return v.invariant; });
}

const GeneratorVerdict& InvarianceReport::verdict(
    const std::string& label) const {
    for (const auto& v : per_generator)
        if (v.label == label) return v;
    throw std::out_of_range("no verdict for " + label);
}

InvarianceReport invariance_check(const Realization& r,
                                  const SubspaceSelector& sel) {
    const FockBasis& b = *r.basis;
    if (r.L < sel.p + 2)
        throw AnalysisError(
            "invariance check needs L >= p + 2 to see the subspace boundary");

    InvarianceReport out;
    out.kind = sel.kind;
    // F0 columns map into degree <= p + 1 <= L, so they are complete;
    // the top F1 layer loses its raising image to the truncation.
    out.max_col_degree = sel.kind == Subspace::F0 ? sel.p : r.L - 1;
    int min_col_degree = sel.kind == Subspace::F0 ? 0 : sel.p + 1;

    for (const auto& [label, op] : r.ops) {
        GeneratorVerdict v{label, true, ""};
        for (const auto& [j, col] : op.columns()) {
            int cdeg = b.degree_of(j);
            if (cdeg < min_col_degree || cdeg > out.max_col_degree) continue;
            for (const auto& [i, val] : col) {
                bool inside = sel.kind == Subspace::F0 ? b.degree_of(i) <= sel.p
                                                       : b.degree_of(i) > sel.p;
                if (inside || entry_negligible(val, r.backend, r.q)) continue;
                v.invariant = false;
                v.witness = elem_str(label, b, i, j, val.str());
                break;
            }
            if (!v.invariant) break;
        }
        out.per_generator.push_back(std::move(v));
    }
    return out;
}

// -------------------------------------------------------------- unitarity

UnitarityReport unitarity_check(const Realization& r, bool expect_fail) {
    if (r.backend != Backend::Numeric)
        throw AnalysisError("unitarity check needs the numeric backend");
    if (r.kind == RealKind::Dyson && !expect_fail)
        throw AnalysisError(
            "Dyson realization is not unitarizable; rerun in expect-fail "
            "mode to obtain the deviation witness");
    if (r.kind != RealKind::Dyson && expect_fail)
        throw AnalysisError("expect-fail mode is the Dyson diagnostic");
    int p = require_small_int(r.p, "unitarity check");
    if (p < 0 || r.L < p)
        throw AnalysisError("unitarity check needs 0 <= p <= L");

    const FockBasis& b = *r.basis;
    UnitarityReport out;
    out.expect_fail = expect_fail;
    out.block_dim = b.dim_up_to_degree(p);

    auto note = [&](const Real& dev, const std::string& label, int row,
                    int col) {
        if (dev > out.deviation) {
            out.deviation = dev;
            std::ostringstream os;
            os << label << " adjoint mismatch at (|" << b.state(row).str()
               << ">, |" << b.state(col).str() << ">)";
            out.witness = os.str();
        }
    };

    for (int i = 1; i <= r.n; ++i) {
        std::string si = std::to_string(i);
        const SparseOp& e = r.op("e" + si);
        const SparseOp& f = r.op("f" + si);
        const SparseOp& h = r.op("h" + si);
        for (int j = 0; j < out.block_dim; ++j) {
            for (int k = 0; k < out.block_dim; ++k) {
                Complex ekj = e.entry(k, j).eval(r.q);
                Complex fjk = f.entry(j, k).eval(r.q);
                note(abs(conj(ekj) - fjk), "e" + si, k, j);
            }
            note(abs(h.entry(j, j).eval(r.q) -
                     conj(h.entry(j, j).eval(r.q))) /
                     Real(2),
                 "h" + si, j, j);
        }
    }
    out.pass = expect_fail ? out.deviation > Real("1e-10")
                           : out.deviation < Real(kTinyTol);
    if (expect_fail && !out.pass)
        out.witness = "no adjoint deviation found (expected one)";
    return out;
}

// --------------------------------------------------- irreducibility probe

IrreducibilityReport irreducibility_probe(const Realization& r) {
    if (r.backend != Backend::Numeric)
        throw AnalysisError("irreducibility probe needs the numeric backend");
    if (boost::multiprecision::denominator(r.p) == 1)
        throw AnalysisError(
            "irreducibility probe is meaningless for integer p (the "
            "representation is reducible by construction)");

    IrreducibilityReport out;
    out.probe_pass = true;
    out.coefficients_checked = r.L + 1;
    // [p - d] for d = 0..L plus the [p - d + 1] companion (d = -1).
    for (int d = -1; d <= r.L; ++d) {
        Real c = abs(qbracket_value(to_real(r.p - d), r.q));
        if (d == -1 || c < out.min_abs) out.min_abs = c;
        if (c <= Real("1e-20")) {
            out.probe_pass = false;
            std::ostringstream os;
            os << "[p - " << d << "] vanishes at q = " << to_decimal_string(r.q);
            out.witness = os.str();
        }
    }
    return out;
}

// --------------------------------------------------------- classical limit

namespace {

void cv_insert(ClassicalValue& v, ClassicalTerm t) {
    if (t.coeff == 0) return;
    for (auto& u : v) {
        if (u.rad == t.rad && u.imag == t.imag) {
            u.coeff += t.coeff;
            if (u.coeff == 0) {
                v.erase(v.begin() + (&u - v.data()));
            }
            return;
        }
    }
    auto pos = std::upper_bound(v.begin(), v.end(), t,
                                [](const ClassicalTerm& a, const ClassicalTerm& b) {
                                    return std::tie(a.rad, a.imag) <
                                           std::tie(b.rad, b.imag);
                                });
    v.insert(pos, std::move(t));
}

}  // namespace

ClassicalValue classical_sqrt(const Rational& r, const Rational& c) {
    if (r == 0 || c == 0) return {};
    Rational rr = r;
    bool imag = rr < 0;
    if (imag) rr = -rr;
    BigInt num = boost::multiprecision::numerator(rr);
    BigInt den = boost::multiprecision::denominator(rr);
    auto [s, f] = extract_square(num * den);
    ClassicalValue out;
    cv_insert(out, ClassicalTerm{c * Rational(s) / Rational(den), f, imag});
    return out;
}

ClassicalValue classical_of(const Scalar& s) {
    if (s.numeric())
        throw AnalysisError("classical limit needs an exact backend");
    if (const QLaurent* l = s.laurent())
        return classical_sqrt(1, l->eval_at_one());
    ClassicalValue out;
    for (const RadTerm& t : s.radical()->terms()) {
        Rational rad = t.rad_rational;
        for (int k : t.radicand) rad *= k;
        for (ClassicalTerm c : classical_sqrt(rad, t.coeff.eval_at_one())) {
            c.imag = c.imag != t.imag;  // i * i = -1 cannot arise: rad > 0
            cv_insert(out, std::move(c));
        }
    }
    return out;
}

std::string classical_str(const ClassicalValue& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) os << " + ";
        os << v[k].coeff;
        if (v[k].imag) os << "*i";
        if (v[k].rad != 1) os << "*sqrt(" << v[k].rad << ")";
    }
    return os.str();
}

namespace {

using EntryMap = std::map<std::pair<int, int>, ClassicalValue>;

void put(EntryMap& m, int row, int col, ClassicalValue v) {
    if (!v.empty()) m[{row, col}] = std::move(v);
}

// The q -> 1 limit of the generator images, constructed directly from the
// classical formulas in the build's own basis normalization.
EntryMap classical_expected(const Realization& r, const std::string& label) {
    const FockBasis& b = *r.basis;
    EntryMap m;
    bool mono = r.norm == Normalization::Monomial;
    bool hp = r.kind != RealKind::Dyson;

    auto diag = [&](const std::function<Rational(const OccVector&)>& f) {
        for (int j = 0; j < b.size(); ++j)
            put(m, j, j, classical_sqrt(1, f(b.state(j))));
    };

    if (label == "I") {
        diag([&](const OccVector&) { return r.p; });
        return m;
    }
    char stem = label[0];
    if (label.rfind("qh", 0) == 0) {  // q^{±h} -> 1
        diag([](const OccVector&) { return Rational(1); });
        return m;
    }
    int i = std::stoi(label.substr(1));
    if (stem == 'h') {
        diag([&](const OccVector& v) { return h_eigenvalue(v, i, r.p); });
        return m;
    }

    for (int j = 0; j < b.size(); ++j) {
        OccVector v = b.state(j);
        int deg = v.degree();
        if (i == 1) {
            int l1 = v.l[0];
            if (stem == 'e' && l1 > 0) {
                OccVector t = v;
                t.l[0] = l1 - 1;
                // (p - N) a_1^-, factor evaluated after lowering
                ClassicalValue val =
                    hp ? classical_sqrt(Rational(l1) * (r.p - deg + 1))
                    : mono
                        ? classical_sqrt(1, Rational(l1) * (r.p - deg + 1))
                        : classical_sqrt(l1, r.p - deg + 1);
                put(m, b.index_of(t), j, std::move(val));
            } else if (stem == 'f' && deg < r.L) {
                OccVector t = v;
                t.l[0] = l1 + 1;
                ClassicalValue val =
                    hp ? classical_sqrt(Rational(l1 + 1) * (r.p - deg))
                    : mono ? classical_sqrt(1, 1)
                           : classical_sqrt(l1 + 1);
                put(m, b.index_of(t), j, std::move(val));
            }
        } else {
            int li = v.l[i - 1], lprev = v.l[i - 2];
            if (stem == 'e' && li > 0) {
                OccVector t = v;
                t.l[i - 1] = li - 1;
                t.l[i - 2] = lprev + 1;
                ClassicalValue val =
                    hp ? classical_sqrt(Rational(lprev + 1) * li)
                    : mono ? classical_sqrt(1, li)
                           : classical_sqrt(Rational(li) * (lprev + 1));
                put(m, b.index_of(t), j, std::move(val));
            } else if (stem == 'f' && lprev > 0) {
                OccVector t = v;
                t.l[i - 2] = lprev - 1;
                t.l[i - 1] = li + 1;
                ClassicalValue val =
                    hp ? classical_sqrt(Rational(lprev) * (li + 1))
                    : mono ? classical_sqrt(1, lprev)
                           : classical_sqrt(Rational(lprev) * (li + 1));
                put(m, b.index_of(t), j, std::move(val));
            }
        }
    }
    return m;
}

}  // namespace

ClassicalLimitReport classical_limit(const Realization& r) {
    if (r.backend == Backend::Numeric)
        throw AnalysisError("classical limit needs an exact backend");
    ClassicalLimitReport out;
    out.pass = true;

    for (const auto& [label, op] : r.ops) {
        EntryMap actual;
        for (const auto& [j, col] : op.columns())
            for (const auto& [i, val] : col) put(actual, i, j, classical_of(val));
        EntryMap expected = classical_expected(r, label);

        EntryMap all = expected;
        all.insert(actual.begin(), actual.end());
        for (const auto& [rc, unused] : all) {
            ++out.entries_checked;
            auto a = actual.find(rc);
            auto e = expected.find(rc);
            ClassicalValue av = a == actual.end() ? ClassicalValue{} : a->second;
            ClassicalValue ev = e == expected.end() ? ClassicalValue{} : e->second;
            if (av == ev) continue;
            out.pass = false;
            if (out.witness.empty())
                out.witness = elem_str(label, *r.basis, rc.first, rc.second,
                                       classical_str(av) + " != classical " +
                                           classical_str(ev));
        }
    }
    return out;
}

}  // namespace qboson
