#ifndef QBOSON_FOCK_HPP
#define QBOSON_FOCK_HPP

#include "qboson/scalar.hpp"

#include <functional>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

namespace qboson {

// Occupation-number vector (l_1, ..., l_n).
struct OccVector {
    std::vector<int> l;

    int degree() const {
        int d = 0;
        for (int v : l) d += v;
        return d;
    }
    friend bool operator==(const OccVector& a, const OccVector& b) {
        return a.l == b.l;
    }
    friend bool operator<(const OccVector& a, const OccVector& b) {
        return a.l < b.l;
    }
    std::string str() const;
};

// All occupation vectors of n modes with total degree <= L, ordered by
// degree then lexicographically.  The grading makes the F_0/F_1 split a
// contiguous index range.
class FockBasis {
  public:
    FockBasis(int n, int L);

    int n() const { return n_; }
    int L() const { return L_; }
    int size() const { return (int)states_.size(); }
    const OccVector& state(int i) const { return states_[i]; }
    int degree_of(int i) const { return states_[i].degree(); }
    // Index of a state, or -1 when out of the truncation.
    int index_of(const OccVector& v) const;
    // Number of states with degree <= d (i.e. first index of degree d+1).
    int dim_up_to_degree(int d) const;

  private:
    int n_, L_;
    std::vector<OccVector> states_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> cum_dim_;  // cum_dim_[d] = #states of degree <= d
};

using BasisPtr = std::shared_ptr<const FockBasis>;

BasisPtr enumerate_basis(int n, int L);

// Sparse operator on a FockBasis, stored column-major.  degree_shift is
// the homogeneous change in total degree, when defined.
class SparseOp {
  public:
    using Column = std::vector<std::pair<int, Scalar>>;  // sorted by row

    SparseOp() = default;
    explicit SparseOp(BasisPtr basis, std::optional<int> degree_shift = 0)
        : basis_(std::move(basis)), degree_shift_(degree_shift) {}

    static SparseOp identity(BasisPtr basis, Backend b, const Real& q = Real(0));
    static SparseOp diagonal(BasisPtr basis,
                             const std::function<Scalar(const OccVector&)>& f);

    const BasisPtr& basis() const { return basis_; }
    std::optional<int> degree_shift() const { return degree_shift_; }
    const std::map<int, Column>& columns() const { return cols_; }

    void set_entry(int row, int col, Scalar v);
    Scalar entry(int row, int col) const;  // zero scalar of entry backend or empty Laurent
    bool is_diagonal() const;

    SparseOp operator-() const;
    friend SparseOp operator+(const SparseOp& a, const SparseOp& b);
    friend SparseOp operator-(const SparseOp& a, const SparseOp& b);
    SparseOp scaled(const Scalar& c) const;

    // Matrix product: (*this) applied after rhs.
    SparseOp compose(const SparseOp& rhs) const;

    // AB - x BA.
    friend SparseOp q_commutator(const SparseOp& a, const SparseOp& b,
                                 const Scalar& x);
    friend SparseOp commutator(const SparseOp& a, const SparseOp& b);

    // True when all columns of states with degree <= max_degree are empty.
    bool is_zero_on_degrees(int max_degree) const;
    // Largest |entry| (at the numeric backend's stored values or the given
    // q for exact entries) over columns of degree <= max_degree.
    Real max_abs_on_degrees(int max_degree, const Real& q) const;
    // First stored nonzero entry in the guarded range, for fail witnesses.
    std::optional<std::tuple<int, int, Scalar>> witness_on_degrees(
        int max_degree) const;

    friend bool operator==(const SparseOp& a, const SparseOp& b);

  private:
    void check_same_basis(const SparseOp& o) const;
    BasisPtr basis_;
    std::map<int, Column> cols_;
    std::optional<int> degree_shift_;
};

// Mode operators on the truncated space; entries follow the chosen basis
// normalization.  Orthonormal: a^+|l> = sqrt(l_i+1)|l+e_i>.  Monomial
// (the rescaled basis (a^+)^l |0> without the 1/sqrt(l!) factor):
// a^+|l) = |l+e_i), a^-|l) = l_i |l-e_i).  raise() drops top-degree
// states (truncation boundary).
enum class Normalization { Orthonormal, Monomial };

struct FockCtx {
    BasisPtr basis;
    Backend backend = Backend::ExactRadical;
    Real q{0};  // numeric backend only
    Normalization norm = Normalization::Orthonormal;

    Scalar rational(const Rational& c) const {
        return Scalar::from_rational(c, backend, q);
    }
    // sqrt(m) for a nonnegative rational m (orthonormal matrix elements).
    Scalar sqrt_rational(const Rational& m) const;
    // [k] for integer k.
    Scalar qint_scalar(int k) const;
};

SparseOp raise_op(const FockCtx& ctx, int mode);   // a_i^+
SparseOp lower_op(const FockCtx& ctx, int mode);   // a_i^-
SparseOp number_op(const FockCtx& ctx, int mode);  // N_i
SparseOp total_number_op(const FockCtx& ctx);      // N

}  // namespace qboson

#endif
