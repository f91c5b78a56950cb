#include "qboson/realization.hpp"

#include <sstream>

namespace qboson {

const char* kind_name(RealKind k) {
    switch (k) {
        case RealKind::Dyson: return "dyson";
        case RealKind::HP: return "hp";
        case RealKind::HPDeformed: return "hp-deformed";
    }
    return "?";
}

RealKind kind_from_name(const std::string& name) {
    if (name == "dyson") return RealKind::Dyson;
    if (name == "hp") return RealKind::HP;
    if (name == "hp-deformed") return RealKind::HPDeformed;
    throw std::invalid_argument("unknown realization kind: " + name);
}

const SparseOp& Realization::op(const std::string& label) const {
    auto it = ops.find(label);
    if (it == ops.end())
        throw std::out_of_range("realization has no generator " + label);
    return it->second;
}

Rational h_eigenvalue(const OccVector& v, int i, const Rational& p) {
    if (i == 1) return p - v.degree() - v.l[0];
    return Rational(v.l[i - 2] - v.l[i - 1]);
}

std::vector<std::string> generator_labels(int n, bool with_central) {
    std::vector<std::string> out;
    for (const char* stem : {"h", "e", "f", "qh", "qhbar"})
        for (int i = 1; i <= n; ++i)
            out.push_back(std::string(stem) + std::to_string(i));
    if (with_central) out.push_back("I");
    return out;
}

namespace {

int require_int(const Rational& x, const char* what) {
    if (boost::multiprecision::denominator(x) != 1) {
        std::ostringstream os;
        os << what << " requires an integer value, got " << x;
        throw BuildError(os.str());
    }
    return boost::multiprecision::numerator(x).convert_to<int>();
}

void validate(int n, int L, Backend backend, const Real& q) {
    if (n < 1) throw BuildError("rank n must be >= 1");
    if (L < 1) throw BuildError("truncation L must be >= 1");
    if (backend == Backend::Numeric && q <= 0)
        throw BuildError("numeric backend requires q > 0");
}

// Cartan images h_i, q^{h_i}, q^{-h_i}.  The h_i are diagonal with
// integer-plus-p eigenvalues; qh_i is the entry-wise exponential.
void add_cartan_ops(Realization& r) {
    for (int i = 1; i <= r.n; ++i) {
        std::string si = std::to_string(i);
        r.ops["h" + si] = SparseOp::diagonal(r.basis, [&](const OccVector& v) {
            return Scalar::from_rational(h_eigenvalue(v, i, r.p), r.backend, r.q);
        });
        for (int sign : {+1, -1}) {
            std::string label = (sign > 0 ? "qh" : "qhbar") + si;
            r.ops[label] = SparseOp::diagonal(r.basis, [&](const OccVector& v) {
                Rational eig = h_eigenvalue(v, i, r.p);
                if (r.backend == Backend::Numeric)
                    return Scalar(QNumeric{
                        Complex(qpow_value(to_real(eig) * sign, r.q)), r.q});
                int e = require_int(eig, "q^h with exact backend");
                return Scalar::q_monomial(sign * e, r.backend, r.q);
            });
        }
    }
}

Scalar qbracket_scalar(const Realization& r, const Rational& arg) {
    if (r.backend == Backend::Numeric)
        return Scalar(QNumeric{Complex(qbracket_value(to_real(arg), r.q)), r.q});
    int k = require_int(arg, "q-bracket with exact backend");
    if (r.backend == Backend::ExactLaurent) return Scalar(qint(k));
    return Scalar(QRadical(qint(k)));
}

// sqrt(prod [arg]) with the HP sign convention; numeric arguments may be
// non-integer, in which case a negative radicand yields an imaginary
// entry.
Scalar sqrt_qints(const Realization& r, const std::vector<Rational>& args) {
    if (r.backend == Backend::Numeric) {
        Real prod(1);
        for (const Rational& a : args) prod *= qbracket_value(to_real(a), r.q);
        return Scalar(QNumeric{csqrt(Complex(prod)), r.q});
    }
    std::vector<int> ks;
    ks.reserve(args.size());
    for (const Rational& a : args)
        ks.push_back(require_int(a, "HP radicand with exact backend"));
    return Scalar(QRadical::sqrt_qint_product(1, ks));
}

}  // namespace

Realization build_dyson(int n, const Rational& p, int L, Backend backend,
                        const Real& q) {
    validate(n, L, backend, q);
    if (backend != Backend::Numeric) require_int(p, "Dyson exact build");
    Realization r;
    r.n = n;
    r.p = p;
    r.L = L;
    r.backend = backend;
    r.q = q;
    r.kind = RealKind::Dyson;
    r.norm = backend == Backend::ExactLaurent ? Normalization::Monomial
                                              : Normalization::Orthonormal;
    r.basis = enumerate_basis(n, L);
    add_cartan_ops(r);
    const FockBasis& b = *r.basis;
    FockCtx ctx = r.ctx();
    bool mono = r.norm == Normalization::Monomial;

    // e_1 = ([N_1+1]/(N_1+1)) [p-N] a_1^-   (prefactor at post-action values)
    SparseOp e1(r.basis, -1);
    for (int j = 0; j < b.size(); ++j) {
        OccVector v = b.state(j);
        int l1 = v.l[0], deg = v.degree();
        if (l1 == 0) continue;
        v.l[0] = l1 - 1;
        Scalar pref = qbracket_scalar(r, Rational(l1)) * qbracket_scalar(r, p - deg + 1);
        Scalar amp = mono ? ctx.rational(1)
                          : ctx.sqrt_rational(l1) * ctx.rational(Rational(1, l1));
        e1.set_entry(b.index_of(v), j, amp * pref);
    }
    r.ops["e1"] = std::move(e1);

    // f_1 = a_1^+
    r.ops["f1"] = raise_op(ctx, 1);

    for (int i = 2; i <= n; ++i) {
        // e_i = ([N_i+1]/(N_i+1)) a_i^- a_{i-1}^+  -> entry [l_i] (monomial)
        SparseOp ei(r.basis, 0), fi(r.basis, 0);
        for (int j = 0; j < b.size(); ++j) {
            OccVector v = b.state(j);
            int li = v.l[i - 1], lprev = v.l[i - 2];
            if (li > 0) {
                OccVector t = v;
                t.l[i - 1] = li - 1;
                t.l[i - 2] = lprev + 1;
                Scalar pref = qbracket_scalar(r, Rational(li));
                Scalar amp =
                    mono ? ctx.rational(1)
                         : ctx.sqrt_rational(Rational(li) * (lprev + 1)) *
                               ctx.rational(Rational(1, li));
                ei.set_entry(b.index_of(t), j, amp * pref);
            }
            if (lprev > 0) {
                // f_i = ([N_{i-1}+1]/(N_{i-1}+1)) a_i^+ a_{i-1}^-
                OccVector t = v;
                t.l[i - 2] = lprev - 1;
                t.l[i - 1] = li + 1;
                Scalar pref = qbracket_scalar(r, Rational(lprev));
                Scalar amp =
                    mono ? ctx.rational(1)
                         : ctx.sqrt_rational(Rational(lprev) * (li + 1)) *
                               ctx.rational(Rational(1, lprev));
                fi.set_entry(b.index_of(t), j, amp * pref);
            }
        }
        r.ops["e" + std::to_string(i)] = std::move(ei);
        r.ops["f" + std::to_string(i)] = std::move(fi);
    }
    return r;
}

Realization build_hp(int n, const Rational& p, int L, Backend backend,
                     const Real& q) {
    validate(n, L, backend, q);
    if (backend == Backend::ExactLaurent)
        throw BuildError("HP build needs the exact-radical or numeric backend");
    if (backend == Backend::ExactRadical) require_int(p, "HP exact build");
    Realization r;
    r.n = n;
    r.p = p;
    r.L = L;
    r.backend = backend;
    r.q = q;
    r.kind = RealKind::HP;
    r.norm = Normalization::Orthonormal;
    r.basis = enumerate_basis(n, L);
    add_cartan_ops(r);
    const FockBasis& b = *r.basis;

    // Per-entry amplitudes collapse to sqrt of q-integer products; the
    // Bose sqrt(l) factors cancel against the [N]/N prefactors.
    SparseOp e1(r.basis, -1), f1(r.basis, +1);
    for (int j = 0; j < b.size(); ++j) {
        OccVector v = b.state(j);
        int l1 = v.l[0], deg = v.degree();
        if (l1 > 0) {
            OccVector t = v;
            t.l[0] = l1 - 1;
            // pi(e_1)|l> = sqrt([l_1][p-deg+1]) |l - e_1>
            e1.set_entry(b.index_of(t), j,
                         sqrt_qints(r, {Rational(l1), p - deg + 1}));
        }
        if (deg < L) {
            OccVector t = v;
            t.l[0] = l1 + 1;
            // pi(f_1)|l> = sqrt([l_1+1][p-deg]) |l + e_1>
            f1.set_entry(b.index_of(t), j,
                         sqrt_qints(r, {Rational(l1 + 1), p - deg}));
        }
    }
    r.ops["e1"] = std::move(e1);
    r.ops["f1"] = std::move(f1);

    for (int i = 2; i <= n; ++i) {
        SparseOp ei(r.basis, 0), fi(r.basis, 0);
        for (int j = 0; j < b.size(); ++j) {
            OccVector v = b.state(j);
            int li = v.l[i - 1], lprev = v.l[i - 2];
            if (li > 0) {
                OccVector t = v;
                t.l[i - 1] = li - 1;
                t.l[i - 2] = lprev + 1;
                // sqrt([l_{i-1}+1][l_i])
                ei.set_entry(b.index_of(t), j,
                             sqrt_qints(r, {Rational(lprev + 1), Rational(li)}));
            }
            if (lprev > 0) {
                OccVector t = v;
                t.l[i - 2] = lprev - 1;
                t.l[i - 1] = li + 1;
                // sqrt([l_{i-1}][l_i+1])
                fi.set_entry(b.index_of(t), j,
                             sqrt_qints(r, {Rational(lprev), Rational(li + 1)}));
            }
        }
        r.ops["e" + std::to_string(i)] = std::move(ei);
        r.ops["f" + std::to_string(i)] = std::move(fi);
    }
    return r;
}

DeformedOscillators build_deformed_oscillators(int n, int L, Backend backend,
                                               const Real& q) {
    validate(n, L, backend, q);
    if (backend == Backend::ExactLaurent)
        throw BuildError(
            "deformed oscillators need the exact-radical or numeric backend");
    DeformedOscillators d;
    d.n = n;
    d.L = L;
    d.backend = backend;
    d.q = q;
    d.basis = enumerate_basis(n, L);
    const FockBasis& b = *d.basis;
    Realization scratch;  // reuse sqrt_qints via a minimal context
    scratch.backend = backend;
    scratch.q = q;
    for (int i = 1; i <= n; ++i) {
        std::string si = std::to_string(i);
        SparseOp am(d.basis, -1), ap(d.basis, +1);
        for (int j = 0; j < b.size(); ++j) {
            OccVector v = b.state(j);
            int li = v.l[i - 1];
            if (li > 0) {
                OccVector t = v;
                t.l[i - 1] = li - 1;
                // atilde_i^- |l> = sqrt([l_i]) |l - e_i>
                am.set_entry(b.index_of(t), j, sqrt_qints(scratch, {Rational(li)}));
            }
            if (v.degree() < L) {
                OccVector t = v;
                t.l[i - 1] = li + 1;
                // atilde_i^+ |l> = sqrt([l_i+1]) |l + e_i>
                ap.set_entry(b.index_of(t), j,
                             sqrt_qints(scratch, {Rational(li + 1)}));
            }
        }
        d.ops["atilde" + si + "m"] = std::move(am);
        d.ops["atilde" + si + "p"] = std::move(ap);
        d.ops["Ntilde" + si] = SparseOp::diagonal(d.basis, [&](const OccVector& v) {
            return Scalar::from_rational(v.l[i - 1], backend, q);
        });
    }
    return d;
}

namespace {

// Re-index an operator built on an enlarged basis (same n, larger L) onto
// the target basis, keeping entries whose row and column both survive.
SparseOp restrict_to(const SparseOp& op, const BasisPtr& target) {
    const FockBasis& big = *op.basis();
    SparseOp out(target, op.degree_shift());
    for (const auto& [j, col] : op.columns()) {
        int tj = target->index_of(big.state(j));
        if (tj < 0) continue;
        for (const auto& [i, v] : col) {
            int ti = target->index_of(big.state(i));
            if (ti < 0) continue;
            out.set_entry(ti, tj, v);
        }
    }
    return out;
}

}  // namespace

Realization build_hp_deformed(int n, const Rational& p, int L, Backend backend,
                              const Real& q) {
    validate(n, L, backend, q);
    if (backend == Backend::ExactLaurent)
        throw BuildError("HP build needs the exact-radical or numeric backend");
    if (backend == Backend::ExactRadical) require_int(p, "HP exact build");
    Realization r;
    r.n = n;
    r.p = p;
    r.L = L;
    r.backend = backend;
    r.q = q;
    r.kind = RealKind::HPDeformed;
    r.norm = Normalization::Orthonormal;
    r.basis = enumerate_basis(n, L);
    add_cartan_ops(r);

    // Compose on an enlarged space so degree-preserving products do not
    // lose their top-degree columns to the truncation, then restrict.
    DeformedOscillators osc = build_deformed_oscillators(n, L + 1, backend, q);
    Realization scratch;
    scratch.backend = backend;
    scratch.q = q;
    auto sqrt_p_shift = [&](int shift) {
        // diag sqrt([p - Ntilde + shift]) on the enlarged basis
        return SparseOp::diagonal(osc.basis, [&](const OccVector& v) {
            return sqrt_qints(scratch, {p - v.degree() + shift});
        });
    };
    auto oscop = [&](const std::string& l) -> const SparseOp& {
        return osc.ops.at(l);
    };

    r.ops["e1"] = restrict_to(sqrt_p_shift(0).compose(oscop("atilde1m")), r.basis);
    r.ops["f1"] = restrict_to(sqrt_p_shift(1).compose(oscop("atilde1p")), r.basis);
    for (int i = 2; i <= n; ++i) {
        std::string si = std::to_string(i), sp = std::to_string(i - 1);
        r.ops["e" + si] = restrict_to(
            oscop("atilde" + si + "m").compose(oscop("atilde" + sp + "p")),
            r.basis);
        r.ops["f" + si] = restrict_to(
            oscop("atilde" + si + "p").compose(oscop("atilde" + sp + "m")),
            r.basis);
    }
    return r;
}

Realization gl_extend(Realization r) {
    Scalar pval = r.backend == Backend::Numeric
                      ? Scalar(QNumeric{Complex(to_real(r.p)), r.q})
                      : Scalar::from_rational(r.p, r.backend, r.q);
    r.ops["I"] = SparseOp::identity(r.basis, r.backend, r.q).scaled(pval);
    return r;
}

}  // namespace qboson
