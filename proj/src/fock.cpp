#include "qboson/fock.hpp"

#include <sstream>
#include <stdexcept>

namespace qboson {

std::string OccVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << ")";
    return os.str();
}

namespace {

void enumerate_rec(int n, int pos, int remaining, std::vector<int>& cur,
                   std::vector<OccVector>& out) {
    if (pos == n) {
        out.push_back(OccVector{cur});
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        enumerate_rec(n, pos + 1, remaining - v, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

FockBasis::FockBasis(int n, int L) : n_(n), L_(L) {
    if (n < 1) throw std::invalid_argument("FockBasis: n must be >= 1");
    if (L < 0) throw std::invalid_argument("FockBasis: L must be >= 0");
    cum_dim_.assign(L + 1, 0);
    for (int d = 0; d <= L; ++d) {
        std::vector<OccVector> layer;
        std::vector<int> cur(n, 0);
        enumerate_rec(n, 0, d, cur, layer);
        for (auto& s : layer)
            if (s.degree() == d) states_.push_back(std::move(s));
        cum_dim_[d] = (int)states_.size();
    }
    for (int i = 0; i < (int)states_.size(); ++i) index_[states_[i].l] = i;
}

int FockBasis::index_of(const OccVector& v) const {
    auto it = index_.find(v.l);
    return it == index_.end() ? -1 : it->second;
}

int FockBasis::dim_up_to_degree(int d) const {
    if (d < 0) return 0;
    return cum_dim_[std::min(d, L_)];
}

BasisPtr enumerate_basis(int n, int L) {
    return std::make_shared<FockBasis>(n, L);
}

Scalar FockCtx::sqrt_rational(const Rational& m) const {
    if (m < 0) throw std::domain_error("sqrt of negative rational");
    switch (backend) {
        case Backend::ExactLaurent:
            throw std::domain_error(
                "exact-laurent backend cannot represent sqrt matrix elements");
        case Backend::ExactRadical:
            return Scalar(QRadical::sqrt_rational(m));
        case Backend::Numeric: {
            using boost::multiprecision::sqrt;
            return Scalar(QNumeric{Complex(sqrt(to_real(m))), q});
        }
    }
    throw std::logic_error("bad backend");
}

Scalar FockCtx::qint_scalar(int k) const {
    switch (backend) {
        case Backend::ExactLaurent: return Scalar(qint(k));
        case Backend::ExactRadical: return Scalar(QRadical(qint(k)));
        case Backend::Numeric:
            return Scalar(QNumeric{Complex(qbracket_value(Real(k), q)), q});
    }
    throw std::logic_error("bad backend");
}

SparseOp raise_op(const FockCtx& ctx, int mode) {
    const FockBasis& b = *ctx.basis;
    if (mode < 1 || mode > b.n()) throw std::out_of_range("mode index");
    SparseOp op(ctx.basis, +1);
    for (int j = 0; j < b.size(); ++j) {
        OccVector v = b.state(j);
        if (v.degree() == b.L()) continue;  // truncation: boundary-lossy
        int li = v.l[mode - 1];
        v.l[mode - 1] = li + 1;
        int i = b.index_of(v);
        Scalar amp = ctx.norm == Normalization::Orthonormal
                         ? ctx.sqrt_rational(li + 1)
                         : ctx.rational(1);
        op.set_entry(i, j, amp);
    }
    return op;
}

SparseOp lower_op(const FockCtx& ctx, int mode) {
    const FockBasis& b = *ctx.basis;
    if (mode < 1 || mode > b.n()) throw std::out_of_range("mode index");
    SparseOp op(ctx.basis, -1);
    for (int j = 0; j < b.size(); ++j) {
        OccVector v = b.state(j);
        int li = v.l[mode - 1];
        if (li == 0) continue;
        v.l[mode - 1] = li - 1;
        int i = b.index_of(v);
        Scalar amp = ctx.norm == Normalization::Orthonormal
                         ? ctx.sqrt_rational(li)
                         : ctx.rational(li);
        op.set_entry(i, j, amp);
    }
    return op;
}

SparseOp number_op(const FockCtx& ctx, int mode) {
    const FockBasis& b = *ctx.basis;
    if (mode < 1 || mode > b.n()) throw std::out_of_range("mode index");
    return SparseOp::diagonal(ctx.basis, [&](const OccVector& v) {
        return ctx.rational(v.l[mode - 1]);
    });
}

SparseOp total_number_op(const FockCtx& ctx) {
    return SparseOp::diagonal(ctx.basis, [&](const OccVector& v) {
        return ctx.rational(v.degree());
    });
}

}  // namespace qboson
