#include "doctest.h"

#include "qboson/scalar.hpp"

#include <random>

using namespace qboson;

namespace {

Real tol30() { return Real("1e-30"); }

// Independent oracle for q-integers: direct formula evaluation.
Real qint_oracle(int k, const Real& q) {
    return qbracket_value(Real(k), q);
}

std::vector<Real> random_qs(std::mt19937_64& rng, int count) {
    std::uniform_real_distribution<double> dist(0.3, 2.5);
    std::vector<Real> qs;
    while ((int)qs.size() < count) {
        double q = dist(rng);
        if (std::abs(q - 1.0) > 0.05) qs.push_back(Real(q));
    }
    return qs;
}

}  // namespace

TEST_CASE("qint basic values") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == QLaurent(1));
    QLaurent two = QLaurent::monomial(1) + QLaurent::monomial(-1);
    CHECK(qint(2) == two);
}

TEST_CASE("qint(-3) matches the numeric oracle") {
    QLaurent m3 = qint(-3);
    QLaurent expected =
        -(QLaurent::monomial(2) + QLaurent(1) + QLaurent::monomial(-2));
    CHECK(m3 == expected);
    std::mt19937_64 rng(42);
    for (const Real& q : random_qs(rng, 5))
        CHECK(abs(Complex(m3.eval(q)) - Complex(qint_oracle(-3, q))) < tol30());
}

TEST_CASE("qint palindromic symmetry and oddness") {
    for (int k = 1; k <= 12; ++k) {
        QLaurent flipped;
        QLaurent orig = qint(k);
        for (const auto& [e, c] : orig.terms())
            flipped += QLaurent::monomial(-e, c);
        CHECK(orig == flipped);
    }
    for (int k = -12; k <= 12; ++k) CHECK(qint(-k) == -qint(k));
}

TEST_CASE("qint classical limit q=1") {
    for (int k = -10; k <= 10; ++k)
        CHECK(qint(k).eval_at_one() == Rational(k));
}

TEST_CASE("q-integer product identity") {
    for (int a = 1; a <= 10; ++a)
        for (int b = 1; b <= a; ++b) {
            QLaurent sum;
            for (int j = 0; j < b; ++j) sum += qint(a + b - 1 - 2 * j);
            CHECK(qint(a) * qint(b) == sum);
        }
}

TEST_CASE("qbracket_value") {
    Real q("1.7");
    CHECK(qbracket_value(Real(1), q) == 1);
    CHECK(qbracket_value(Real(0), q) == 0);
    CHECK(qbracket_value(Real("2.5"), Real(1)) == Real("2.5"));
    CHECK_THROWS(qbracket_value(Real(1), Real(-1)));
    // x=2.5, q=2: (2^2.5 - 2^-2.5)/(2 - 1/2), frozen from the direct
    // formula at high precision.
    Real v = qbracket_value(Real("2.5"), Real(2));
    using boost::multiprecision::sqrt;
    Real expected = (sqrt(Real(32)) - 1 / sqrt(Real(32))) / Real("1.5");
    CHECK(abs(Complex(v) - Complex(expected)) < tol30());
    CHECK(abs(Complex(v) - Complex(Real("3.65338503614"))) < Real("1e-10"));
}

TEST_CASE("radical square extraction") {
    // sqrt([2]) * sqrt([2]) = [2]
    QRadical s2 = QRadical::sqrt_qint_product(1, {2});
    QRadical prod = s2 * s2;
    REQUIRE(prod.as_laurent().has_value());
    CHECK(*prod.as_laurent() == qint(2));

    // sqrt([2]) * sqrt([3]): single term with radicand {2,3}
    QRadical s3 = QRadical::sqrt_qint_product(1, {3});
    QRadical mixed = s2 * s3;
    REQUIRE(mixed.terms().size() == 1);
    CHECK(mixed.terms()[0].radicand == std::vector<int>{2, 3});
    CHECK(mixed.terms()[0].rad_rational == 1);

    // sqrt(1/2 [2]) * sqrt(2 [3]) = sqrt([2][3])
    QRadical a = QRadical::sqrt_qint_product(Rational(1, 2), {2});
    QRadical b = QRadical::sqrt_qint_product(Rational(2), {3});
    CHECK(a * b == mixed);
    std::mt19937_64 rng(7);
    for (const Real& q : random_qs(rng, 5))
        CHECK(abs((a * b).eval(q) - a.eval(q) * b.eval(q)) < tol30());
}

TEST_CASE("radical sign conventions") {
    // [−k] = −[k] under the root; overall negative radicand -> imaginary.
    QRadical neg = QRadical::sqrt_qint_product(1, {2, -3});
    REQUIRE(neg.terms().size() == 1);
    CHECK(neg.terms()[0].imag);
    QRadical sq = neg * neg;
    REQUIRE(sq.as_laurent().has_value());
    CHECK(*sq.as_laurent() == -(qint(2) * qint(3)));
    // zero factor
    CHECK(QRadical::sqrt_qint_product(1, {2, 0}).is_zero());
    CHECK(QRadical::sqrt_rational(0).is_zero());
}

TEST_CASE("radical normal-form soundness on random products") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> idx(1, 6);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> ratpick(1, 12);
    auto random_radical = [&]() {
        QRadical r;
        int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            Rational rr(ratpick(rng), ratpick(rng));
            std::vector<int> ks = {idx(rng), idx(rng)};
            QRadical term = QRadical::sqrt_qint_product(rr, ks);
            term *= Rational(coeff(rng));
            r += term;
        }
        return r;
    };
    std::vector<Real> qs = random_qs(rng, 5);
    for (int trial = 0; trial < 100; ++trial) {
        QRadical a = random_radical(), b = random_radical();
        QRadical p = a * b;
        for (const Real& q : qs)
            CHECK(abs(p.eval(q) - a.eval(q) * b.eval(q)) < tol30());
    }
}

TEST_CASE("is_zero exact and sampled") {
    Scalar z1 = Scalar(qint(2) - (QLaurent::monomial(1) + QLaurent::monomial(-1)));
    CHECK(is_zero(z1, ZeroPolicy::Exact).zero);
    CHECK(is_zero(z1, ZeroPolicy::Exact).exact);

    Scalar z2 = Scalar(qint(3) * qint(1) - qint(3));
    CHECK(is_zero(z2, ZeroPolicy::Exact).zero);

    // classical identity [2]^2 = [3] + [1]
    Scalar z3 = Scalar(qint(2) * qint(2) - qint(3) - qint(1));
    CHECK(is_zero(z3, ZeroPolicy::Exact).zero);

    Scalar nz = Scalar(qint(2));
    CHECK_FALSE(is_zero(nz, ZeroPolicy::Exact).zero);
    auto cert = is_zero(nz, ZeroPolicy::Sampled);
    CHECK_FALSE(cert.zero);
    CHECK(cert.samples.size() >= 8);
}

TEST_CASE("scalar backend rules") {
    Real q("0.8");
    Scalar a = Scalar::from_rational(Rational(3, 2), Backend::Numeric, q);
    Scalar b = Scalar::q_monomial(-1, Backend::Numeric, q);
    Scalar c = a * b;
    CHECK(abs(c.eval(q) - Complex(Real("1.875"))) < tol30());
    CHECK_THROWS((void)(a + Scalar(qint(1))));

    // Laurent promotes to radical
    Scalar l = Scalar(qint(2));
    Scalar r = Scalar(QRadical::sqrt_qint_product(1, {3}));
    CHECK((l * r).radical() != nullptr);
}
