#ifndef QBOSON_REALIZATION_HPP
#define QBOSON_REALIZATION_HPP

#include "qboson/fock.hpp"

#include <string>

namespace qboson {

enum class RealKind { Dyson, HP, HPDeformed };

const char* kind_name(RealKind k);
RealKind kind_from_name(const std::string& name);

// Images of the Chevalley generators (plus the diagonal exponentials and,
// after gl_extend, the central element I) as sparse operators on a
// truncated Fock space.
//
// Basis normalization: the exact-laurent Dyson build uses the monomial
// basis (a^+)^l |0>, in which every entry is a rational-in-q Laurent
// polynomial; all other builds use the orthonormal basis, whose matrix
// elements carry the usual Bose square roots.
struct Realization {
    int n = 1;
    Rational p{0};
    int L = 1;
    Backend backend = Backend::ExactLaurent;
    Real q{0};  // numeric backend only
    RealKind kind = RealKind::Dyson;
    Normalization norm = Normalization::Orthonormal;
    BasisPtr basis;
    std::map<std::string, SparseOp> ops;

    const SparseOp& op(const std::string& label) const;
    bool has(const std::string& label) const { return ops.count(label) != 0; }
    FockCtx ctx() const { return FockCtx{basis, backend, q, norm}; }
};

struct DeformedOscillators {
    int n = 1;
    int L = 1;
    Backend backend = Backend::ExactRadical;
    Real q{0};
    BasisPtr basis;
    // labels: atilde{i}p, atilde{i}m, Ntilde{i}
    std::map<std::string, SparseOp> ops;
};

struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Realization build_dyson(int n, const Rational& p, int L, Backend backend,
                        const Real& q = Real(0));
Realization build_hp(int n, const Rational& p, int L, Backend backend,
                     const Real& q = Real(0));
DeformedOscillators build_deformed_oscillators(int n, int L, Backend backend,
                                               const Real& q = Real(0));
Realization build_hp_deformed(int n, const Rational& p, int L, Backend backend,
                              const Real& q = Real(0));
// Adds the central element I = p * Id (gl(n+1) extension).
Realization gl_extend(Realization r);

// h-eigenvalue of generator h_i on a state (p - N - N_1 for i=1,
// N_{i-1} - N_i otherwise).
Rational h_eigenvalue(const OccVector& v, int i, const Rational& p);

// Generator labels h_i, e_i, f_i, qh_i, qhbar_i for rank n (plus I when
// present).
std::vector<std::string> generator_labels(int n, bool with_central);

}  // namespace qboson

#endif
