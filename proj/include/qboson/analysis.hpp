#ifndef QBOSON_ANALYSIS_HPP
#define QBOSON_ANALYSIS_HPP

#include "qboson/realization.hpp"

namespace qboson {

struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- weights

// Per-state h-eigenvalue vectors (h_1, ..., h_n).  Asserts every stored
// h_i image is exactly diagonal and matches the closed-form eigenvalue
// p - N - N_1 (i = 1) or N_{i-1} - N_i; a mismatch signals a builder bug.
struct WeightReport {
    std::vector<OccVector> states;
    std::vector<std::vector<Rational>> table;  // table[state][i-1]
};

WeightReport weights(const Realization& r);

// ------------------------------------------------------------- invariance

// F0 = span of states of degree <= p, F1 = degree > p; both are
// contiguous index ranges in the graded basis.
enum class Subspace { F0, F1 };

struct SubspaceSelector {
    Subspace kind = Subspace::F0;
    int p = 0;

    // Half-open index range [lo, hi) in the basis.
    std::pair<int, int> range(const FockBasis& b) const;
    int dim(const FockBasis& b) const {
        auto [lo, hi] = range(b);
        return hi - lo;
    }
};

// binomial(n + p, n), the dimension of F0 once L >= p.
BigInt f0_dimension(int n, int p);

struct GeneratorVerdict {
    std::string label;
    bool invariant = false;
    std::string witness;  // offending matrix element, when not invariant
};

struct InvarianceReport {
    Subspace kind = Subspace::F0;
    int max_col_degree = 0;  // columns checked (F1 stops at L-1)
    std::vector<GeneratorVerdict> per_generator;

    bool all_invariant() const;
    const GeneratorVerdict& verdict(const std::string& label) const;
};

// Requires L >= p + 2 so the F0/F1 boundary is visible inside the
// truncation.  F0 columns are fully represented and checked as stated;
// F1 columns are checked for degrees p+1 .. L-1 (raising images of the
// top layer fall outside the truncation).
InvarianceReport invariance_check(const Realization& r,
                                  const SubspaceSelector& sel);

// -------------------------------------------------------------- unitarity

// Adjointness under the anti-involution fixing h_i and swapping e_i with
// f_i, tested entry-wise on the F0 block in the orthonormal basis: the
// scalar product is conjugate-linear in the first argument and linear in
// the second, so the claim is conj(e_i[k][j]) = f_i[j][k] plus real h_i.
struct UnitarityReport {
    bool expect_fail = false;
    bool pass = false;  // expect-fail mode: a genuine deviation was found
    Real deviation{0};  // max |conj-transpose mismatch| over the block
    std::string witness;
    int block_dim = 0;
};

// Numeric backend, q > 0, integer p, HP (or HP-deformed) build.  A Dyson
// build is refused unless expect_fail is set, in which case the check
// must exhibit a nonzero deviation.
UnitarityReport unitarity_check(const Realization& r, bool expect_fail = false);

// --------------------------------------------------- irreducibility probe

// Finite-truncation probe for non-integer p: every boundary coefficient
// [p - d] and [p - d + 1], d = 0..L, must be nonzero, so no graded cut
// decouples under e_1/f_1.  A probe, not a proof.
struct IrreducibilityReport {
    bool probe_pass = false;
    int coefficients_checked = 0;  // distinct [p - d] values, d = 0..L
    Real min_abs{0};
    std::string witness;  // vanishing coefficient, when the probe fails
};

IrreducibilityReport irreducibility_probe(const Realization& r);

// --------------------------------------------------------- classical limit

// q -> 1 evaluation of an exact build, compared entry-by-entry with an
// independently constructed classical realization (h_1 = p - N - N_1,
// e_1 = (p - N)a_1^-, f_1 = a_1^+, e_i = a_i^- a_{i-1}^+,
// f_i = a_i^+ a_{i-1}^-, with square roots in the HP form), in the same
// basis normalization as the build.  Equality is exact: values live in
// the ring Q + Q*sqrt(m) + i*(...) with square-free m.
struct ClassicalLimitReport {
    bool pass = false;
    int entries_checked = 0;
    std::string witness;  // first mismatching entry
};

ClassicalLimitReport classical_limit(const Realization& r);

// Exact value of a scalar at q = 1: sum of c * i^imag * sqrt(m) terms
// with square-free integer m >= 1, sorted and merged.  Exposed for tests.
struct ClassicalTerm {
    Rational coeff;
    BigInt rad{1};
    bool imag = false;

    friend bool operator==(const ClassicalTerm& a, const ClassicalTerm& b) {
        return a.coeff == b.coeff && a.rad == b.rad && a.imag == b.imag;
    }
};
using ClassicalValue = std::vector<ClassicalTerm>;

ClassicalValue classical_of(const Scalar& s);
// c * sqrt(r) for rational r (negative r gives an imaginary value).
ClassicalValue classical_sqrt(const Rational& r, const Rational& c = 1);
std::string classical_str(const ClassicalValue& v);

}  // namespace qboson

#endif
