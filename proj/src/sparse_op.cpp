#include "qboson/fock.hpp"

#include <stdexcept>

namespace qboson {

namespace {

std::optional<int> merge_shift(std::optional<int> a, std::optional<int> b,
                               bool a_empty, bool b_empty) {
    if (a_empty) return b;
    if (b_empty) return a;
    if (a && b && *a == *b) return a;
    return std::nullopt;  // mixed
}

}  // namespace

SparseOp SparseOp::identity(BasisPtr basis, Backend b, const Real& q) {
    SparseOp op(basis, 0);
    for (int i = 0; i < basis->size(); ++i)
        op.set_entry(i, i, Scalar::from_rational(1, b, q));
    return op;
}

SparseOp SparseOp::diagonal(BasisPtr basis,
                            const std::function<Scalar(const OccVector&)>& f) {
    SparseOp op(basis, 0);
    for (int i = 0; i < basis->size(); ++i)
        op.set_entry(i, i, f(basis->state(i)));
    return op;
}

void SparseOp::set_entry(int row, int col, Scalar v) {
    if (v.is_zero()) return;
    Column& c = cols_[col];
    auto pos = std::lower_bound(
        c.begin(), c.end(), row,
        [](const std::pair<int, Scalar>& e, int r) { return e.first < r; });
    if (pos != c.end() && pos->first == row) {
        pos->second = std::move(v);
    } else {
        c.insert(pos, {row, std::move(v)});
    }
}

Scalar SparseOp::entry(int row, int col) const {
    auto it = cols_.find(col);
    if (it != cols_.end())
        for (const auto& [r, v] : it->second)
            if (r == row) return v;
    return Scalar();
}

bool SparseOp::is_diagonal() const {
    for (const auto& [j, col] : cols_)
        for (const auto& [i, v] : col)
            if (i != j) return false;
    return true;
}

void SparseOp::check_same_basis(const SparseOp& o) const {
    if (basis_ == o.basis_) return;
    if (!basis_ || !o.basis_ || basis_->n() != o.basis_->n() ||
        basis_->L() != o.basis_->L())
        throw std::invalid_argument("SparseOp: basis mismatch");
}

SparseOp SparseOp::operator-() const {
    SparseOp r(basis_, degree_shift_);
    for (const auto& [j, col] : cols_) {
        Column nc;
        nc.reserve(col.size());
        for (const auto& [i, v] : col) nc.emplace_back(i, -v);
        r.cols_[j] = std::move(nc);
    }
    return r;
}

SparseOp operator+(const SparseOp& a, const SparseOp& b) {
    a.check_same_basis(b);
    SparseOp r(a.basis_, merge_shift(a.degree_shift_, b.degree_shift_,
                                     a.cols_.empty(), b.cols_.empty()));
    r.cols_ = a.cols_;
    for (const auto& [j, col] : b.cols_)
        for (const auto& [i, v] : col) {
            auto& c = r.cols_[j];
            auto pos = std::lower_bound(c.begin(), c.end(), i,
                                        [](const std::pair<int, Scalar>& e,
                                           int row) { return e.first < row; });
            if (pos != c.end() && pos->first == i) {
                Scalar sum = pos->second + v;
                if (sum.is_zero())
                    c.erase(pos);
                else
                    pos->second = std::move(sum);
            } else if (!v.is_zero()) {
                c.insert(pos, {i, v});
            }
            if (c.empty()) r.cols_.erase(j);
        }
    return r;
}

SparseOp operator-(const SparseOp& a, const SparseOp& b) { return a + (-b); }

SparseOp SparseOp::scaled(const Scalar& c) const {
    SparseOp r(basis_, degree_shift_);
    if (c.is_zero()) return r;
    for (const auto& [j, col] : cols_) {
        Column nc;
        nc.reserve(col.size());
        for (const auto& [i, v] : col) {
            Scalar p = c * v;
            if (!p.is_zero()) nc.emplace_back(i, std::move(p));
        }
        if (!nc.empty()) r.cols_[j] = std::move(nc);
    }
    return r;
}

SparseOp SparseOp::compose(const SparseOp& rhs) const {
    check_same_basis(rhs);
    std::optional<int> shift;
    if (degree_shift_ && rhs.degree_shift_)
        shift = *degree_shift_ + *rhs.degree_shift_;
    SparseOp r(basis_, shift);
    for (const auto& [j, colB] : rhs.cols_) {
        std::map<int, Scalar> acc;
        for (const auto& [k, vb] : colB) {
            auto itA = cols_.find(k);
            if (itA == cols_.end()) continue;
            for (const auto& [i, va] : itA->second) {
                Scalar p = va * vb;
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, std::move(p));
                else
                    it->second += p;
            }
        }
        Column nc;
        for (auto& [i, v] : acc)
            if (!v.is_zero()) nc.emplace_back(i, std::move(v));
        if (!nc.empty()) r.cols_[j] = std::move(nc);
    }
    return r;
}

SparseOp q_commutator(const SparseOp& a, const SparseOp& b, const Scalar& x) {
    return a.compose(b) - b.compose(a).scaled(x);
}

SparseOp commutator(const SparseOp& a, const SparseOp& b) {
    return a.compose(b) - b.compose(a);
}

bool SparseOp::is_zero_on_degrees(int max_degree) const {
    for (const auto& [j, col] : cols_)
        if (basis_->degree_of(j) <= max_degree && !col.empty()) return false;
    return true;
}

Real SparseOp::max_abs_on_degrees(int max_degree, const Real& q) const {
    Real worst(0);
    for (const auto& [j, col] : cols_) {
        if (basis_->degree_of(j) > max_degree) continue;
        for (const auto& [i, v] : col) {
            Real a = v.abs_at(q);
            if (a > worst) worst = a;
        }
    }
    return worst;
}

std::optional<std::tuple<int, int, Scalar>> SparseOp::witness_on_degrees(
    int max_degree) const {
    for (const auto& [j, col] : cols_) {
        if (basis_->degree_of(j) > max_degree) continue;
        if (!col.empty()) return std::tuple{col.front().first, j, col.front().second};
    }
    return std::nullopt;
}

bool operator==(const SparseOp& a, const SparseOp& b) {
    a.check_same_basis(b);
    return a.cols_ == b.cols_;
}

}  // namespace qboson
