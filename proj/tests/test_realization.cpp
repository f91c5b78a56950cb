#include "doctest.h"

#include "qboson/realization.hpp"

using namespace qboson;

namespace {

Scalar rad(QLaurent l) { return Scalar(QRadical(std::move(l))); }

}  // namespace

TEST_CASE("dyson h_1 diagonal") {
    Realization r = build_dyson(1, 2, 3, Backend::ExactLaurent);
    const SparseOp& h = r.op("h1");
    for (int l = 0; l <= 3; ++l)
        CHECK(h.entry(l, l) == Scalar(QLaurent(Rational(2 - 2 * l))));
    CHECK(r.op("e1").degree_shift() == -1);
    CHECK(r.op("f1").degree_shift() == 1);
}

TEST_CASE("dyson n=1 diagonal of [e,f] is [p-2l]") {
    // Hand identity: ef|l> = [l+1][p-l]|l>, fe|l> = [l][p-l+1]|l>, and
    // [l+1][p-l] - [l][p-l+1] = [p-2l].
    for (int p : {1, 2, 3, 5}) {
        Realization r = build_dyson(1, p, 4, Backend::ExactLaurent);
        SparseOp c = commutator(r.op("e1"), r.op("f1"));
        for (int l = 0; l <= 3; ++l) {
            CHECK(c.entry(l, l) == Scalar(qint(p - 2 * l)));
            CHECK(qint(l + 1) * qint(p - l) - qint(l) * qint(p - l + 1) ==
                  qint(p - 2 * l));
        }
    }
    // numeric cross-check
    Real q("0.8");
    Realization rn = build_dyson(1, 3, 4, Backend::Numeric, q);
    SparseOp cn = commutator(rn.op("e1"), rn.op("f1"));
    for (int l = 0; l <= 3; ++l)
        CHECK(abs(cn.entry(l, l).eval(q) -
                  Complex(qbracket_value(Real(3 - 2 * l), q))) < Real("1e-40"));
}

TEST_CASE("dyson boundary annihilation (F_1 invariance mechanism)") {
    // p=2: e_1|3> carries the factor [p-N] evaluated at N=2, i.e. [0]=0.
    Realization r = build_dyson(1, 2, 3, Backend::ExactLaurent);
    CHECK(r.op("e1").entry(2, 3).is_zero());
    CHECK(r.op("e1").columns().count(3) == 0);
}

TEST_CASE("dyson exact entries are radical-free") {
    Realization r = build_dyson(2, 3, 3, Backend::ExactLaurent);
    for (const auto& [label, op] : r.ops)
        for (const auto& [j, col] : op.columns())
            for (const auto& [i, v] : col) CHECK(v.laurent() != nullptr);
}

TEST_CASE("hp two-dimensional representation (n=1, p=1, L=1)") {
    Realization r = build_hp(1, 1, 1, Backend::ExactRadical);
    CHECK(r.op("e1").entry(0, 1) == rad(QLaurent(1)));
    CHECK(r.op("f1").entry(1, 0) == rad(QLaurent(1)));
    CHECK(r.op("h1").entry(0, 0) == rad(QLaurent(1)));
    CHECK(r.op("h1").entry(1, 1) == rad(QLaurent(-1)));
}

TEST_CASE("hp entries collapse to sqrt of q-integer products") {
    Realization r = build_hp(1, 2, 2, Backend::ExactRadical);
    // pi(e_1)|2> = sqrt([2]) |1>
    CHECK(r.op("e1").entry(1, 2) == Scalar(QRadical::sqrt_qint_product(1, {2})));
    // numeric cross-check
    Real q("0.7");
    Realization rn = build_hp(1, 2, 2, Backend::Numeric, q);
    using boost::multiprecision::sqrt;
    CHECK(abs(rn.op("e1").entry(1, 2).eval(q) -
              Complex(sqrt(qbracket_value(Real(2), q)))) < Real("1e-40"));
}

TEST_CASE("hp f_1 annihilates the F_0 top layer") {
    // [p-N+1] at N = p+1 is [0] = 0, so f_1|p> = 0.
    for (int p : {1, 2}) {
        Realization r = build_hp(1, p, p + 2, Backend::ExactRadical);
        CHECK(r.op("f1").columns().count(p) == 0);
    }
}

TEST_CASE("weights agree between dyson and hp") {
    for (int n : {1, 2}) {
        Realization d = build_dyson(n, 2, 3, Backend::ExactLaurent);
        Realization h = build_hp(n, 2, 3, Backend::ExactRadical);
        for (int i = 1; i <= n; ++i) {
            const SparseOp& hd = d.op("h" + std::to_string(i));
            const SparseOp& hh = h.op("h" + std::to_string(i));
            for (int s = 0; s < d.basis->size(); ++s) {
                auto a = hd.entry(s, s), b = hh.entry(s, s);
                // same rational constant in both backends
                CHECK(Scalar(QRadical(*a.laurent())) == b);
            }
        }
    }
}

TEST_CASE("qh diagonals exponentiate h and invert exactly") {
    for (Backend be : {Backend::ExactLaurent, Backend::ExactRadical}) {
        Realization r = be == Backend::ExactLaurent
                            ? build_dyson(2, 2, 3, be)
                            : build_hp(2, 2, 3, be);
        for (int i = 1; i <= 2; ++i) {
            std::string si = std::to_string(i);
            SparseOp prod = r.op("qh" + si).compose(r.op("qhbar" + si));
            SparseOp id = SparseOp::identity(r.basis, be, r.q);
            CHECK((prod - id).columns().empty());
            for (int s = 0; s < r.basis->size(); ++s) {
                Rational eig = h_eigenvalue(r.basis->state(s), i, r.p);
                int e = boost::multiprecision::numerator(eig).convert_to<int>();
                CHECK(r.op("qh" + si).entry(s, s) ==
                      Scalar::q_monomial(e, be, r.q));
            }
        }
    }
}

TEST_CASE("generator degree homogeneity") {
    Realization r = build_hp(2, 2, 3, Backend::ExactRadical);
    for (const auto& [label, op] : r.ops) {
        REQUIRE(op.degree_shift().has_value());
        int s = *op.degree_shift();
        if (label == "e1")
            CHECK(s == -1);
        else if (label == "f1")
            CHECK(s == 1);
        else
            CHECK(s == 0);
        for (const auto& [j, col] : op.columns())
            for (const auto& [i, v] : col)
                CHECK(r.basis->degree_of(i) - r.basis->degree_of(j) == s);
    }
}

TEST_CASE("deformed oscillator matrix elements") {
    DeformedOscillators d = build_deformed_oscillators(1, 2, Backend::ExactRadical);
    CHECK(d.ops.at("atilde1m").entry(0, 1) == rad(QLaurent(1)));
    CHECK(d.ops.at("atilde1p").entry(1, 0) == rad(QLaurent(1)));
    CHECK(d.ops.at("atilde1p").entry(2, 1) ==
          Scalar(QRadical::sqrt_qint_product(1, {2})));
    CHECK(d.ops.at("Ntilde1").entry(1, 1) == rad(QLaurent(1)));
}

TEST_CASE("hp-deformed equals hp") {
    // exact backends: normal-form equality of every generator image
    for (int n : {1, 2})
        for (int p : {1, 2}) {
            Realization a = build_hp(n, p, 2, Backend::ExactRadical);
            Realization b = build_hp_deformed(n, p, 2, Backend::ExactRadical);
            for (const auto& label : generator_labels(n, false))
                CHECK(a.op(label) == b.op(label));
        }
    // numeric: entry-wise within 1e-30 at q = 0.7
    Real q("0.7");
    Realization a = build_hp(2, 2, 2, Backend::Numeric, q);
    Realization b = build_hp_deformed(2, 2, 2, Backend::Numeric, q);
    for (const auto& label : generator_labels(2, false)) {
        SparseOp diff = a.op(label) - b.op(label);
        CHECK(diff.max_abs_on_degrees(2, q) < Real("1e-30"));
    }
    // n=1, p=1: pi(e_1) = sqrt([1]) atilde_1^- acts as |1> -> |0>
    Realization c = build_hp_deformed(1, 1, 1, Backend::ExactRadical);
    CHECK(c.op("e1").entry(0, 1) == rad(QLaurent(1)));
    // f_1|p> = 0 for integer p
    Realization e = build_hp_deformed(1, 2, 3, Backend::ExactRadical);
    CHECK(e.op("f1").columns().count(2) == 0);
}

TEST_CASE("gl extension adds a central element") {
    Realization r = gl_extend(build_dyson(2, 3, 2, Backend::ExactLaurent));
    const SparseOp& I = r.op("I");
    for (const auto& label : generator_labels(2, false))
        CHECK(commutator(I, r.op(label)).columns().empty());
    Rational trace(0);
    for (int s = 0; s < r.basis->size(); ++s) {
        CHECK(I.entry(s, s) == Scalar(QLaurent(Rational(3))));
        trace += *I.entry(s, s).laurent()->as_constant();
    }
    CHECK(trace == Rational(3 * r.basis->size()));
}

TEST_CASE("build validation errors") {
    CHECK_THROWS_AS(build_dyson(1, Rational(5, 2), 2, Backend::ExactLaurent),
                    BuildError);
    CHECK_THROWS_AS(build_hp(1, Rational(5, 2), 2, Backend::ExactRadical),
                    BuildError);
    CHECK_THROWS_AS(build_hp(1, 1, 2, Backend::ExactLaurent), BuildError);
    CHECK_THROWS_AS(build_dyson(1, 1, 0, Backend::ExactLaurent), BuildError);
    CHECK_THROWS_AS(build_dyson(1, 1, 2, Backend::Numeric, Real(-1)), BuildError);
}

TEST_CASE("non-integer p gives imaginary entries past the sign change") {
    // [p-N] changes sign beyond N = p; the numeric backend represents the
    // square root with an imaginary part instead of failing.
    Real q("0.9");
    Realization r = build_hp(1, Rational(1, 2), 3, Backend::Numeric, q);
    Scalar deep = r.op("e1").entry(1, 2);  // sqrt([2][1/2-1]) is imaginary
    CHECK(deep.numeric()->value.re == 0);
    CHECK(deep.numeric()->value.im > 0);
}
