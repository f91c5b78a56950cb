#include "doctest.h"

#include "qboson/fock.hpp"

#include <random>

using namespace qboson;

namespace {

// Brute-force oracle: count tuples in [0..L]^n with component sum <= L.
int count_states(int n, int L) {
    int count = 0;
    std::vector<int> v(n, 0);
    while (true) {
        int s = 0;
        for (int x : v) s += x;
        if (s <= L) ++count;
        int pos = n - 1;
        while (pos >= 0 && v[pos] == L) v[pos--] = 0;
        if (pos < 0) break;
        ++v[pos];
    }
    return count;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

FockCtx radical_ctx(int n, int L) {
    return FockCtx{enumerate_basis(n, L), Backend::ExactRadical};
}

}  // namespace

TEST_CASE("basis enumeration examples") {
    auto b1 = enumerate_basis(1, 2);
    REQUIRE(b1->size() == 3);
    CHECK(b1->state(0).l == std::vector<int>{0});
    CHECK(b1->state(1).l == std::vector<int>{1});
    CHECK(b1->state(2).l == std::vector<int>{2});

    auto b2 = enumerate_basis(2, 1);
    REQUIRE(b2->size() == 3);
    CHECK(b2->state(0).l == std::vector<int>{0, 0});
    CHECK(b2->state(1).l == std::vector<int>{1, 0});
    CHECK(b2->state(2).l == std::vector<int>{0, 1});

    CHECK(enumerate_basis(3, 4)->size() == 35);
    CHECK_THROWS(enumerate_basis(0, 2));
}

TEST_CASE("basis size matches binomial and brute force") {
    for (int n = 1; n <= 4; ++n)
        for (int L = 0; L <= 6; ++L) {
            auto b = enumerate_basis(n, L);
            CHECK(b->size() == binom(n + L, n));
            CHECK(b->size() == count_states(n, L));
        }
}

TEST_CASE("grading and index bimaps") {
    auto b = enumerate_basis(3, 4);
    for (int i = 0; i + 1 < b->size(); ++i)
        CHECK(b->degree_of(i) <= b->degree_of(i + 1));
    for (int i = 0; i < b->size(); ++i)
        CHECK(b->index_of(b->state(i)) == i);
    for (int d = 0; d <= 4; ++d) {
        int m = b->dim_up_to_degree(d);
        CHECK(m == binom(3 + d, 3));
    }
}

TEST_CASE("raise and lower matrix elements") {
    FockCtx ctx = radical_ctx(1, 3);
    SparseOp up = raise_op(ctx, 1), down = lower_op(ctx, 1);
    CHECK(down.entry(0, 1) == Scalar(QRadical(Rational(1))));
    CHECK(up.entry(2, 1) == Scalar(QRadical::sqrt_rational(2)));
    // truncation: top-degree column of raise is empty
    CHECK(up.columns().count(3) == 0);
    CHECK(up.degree_shift() == 1);
    CHECK(down.degree_shift() == -1);
    CHECK_THROWS(raise_op(ctx, 2));
}

TEST_CASE("cross-mode commutators vanish") {
    FockCtx ctx = radical_ctx(2, 2);
    SparseOp c = commutator(lower_op(ctx, 1), raise_op(ctx, 2));
    CHECK(c.is_zero_on_degrees(1));  // guard 1
}

TEST_CASE("boson relations on the guarded subspace") {
    FockCtx ctx = radical_ctx(2, 3);
    int L = 3;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            SparseOp c = commutator(lower_op(ctx, i), raise_op(ctx, j));
            if (i == j)
                c = c - SparseOp::identity(ctx.basis, ctx.backend, ctx.q);
            CHECK(c.is_zero_on_degrees(L - 1));
            CHECK(commutator(raise_op(ctx, i), raise_op(ctx, j))
                      .is_zero_on_degrees(L - 2));
            CHECK(commutator(lower_op(ctx, i), lower_op(ctx, j))
                      .is_zero_on_degrees(L));
        }
}

TEST_CASE("number operators") {
    FockCtx ctx = radical_ctx(2, 3);
    auto b = ctx.basis;
    SparseOp n1 = number_op(ctx, 1), nt = total_number_op(ctx);
    int i21 = b->index_of(OccVector{{2, 1}});
    REQUIRE(i21 >= 0);
    CHECK(n1.entry(i21, i21) == ctx.rational(2));
    CHECK(nt.entry(i21, i21) == ctx.rational(3));
    // N_i = a_i^+ a_i^- as matrices
    for (int i = 1; i <= 2; ++i) {
        SparseOp composed = raise_op(ctx, i).compose(lower_op(ctx, i));
        CHECK((number_op(ctx, i) - composed).is_zero_on_degrees(3));
    }
}

TEST_CASE("diagonal functions of number operators") {
    FockCtx ctx = radical_ctx(1, 3);
    // f = [N_1+1]/(N_1+1)
    SparseOp f = SparseOp::diagonal(ctx.basis, [&](const OccVector& v) {
        QRadical r(qint(v.l[0] + 1));
        r *= Rational(1, v.l[0] + 1);
        return Scalar(r);
    });
    for (int l = 0; l <= 3; ++l) {
        QRadical want(qint(l + 1));
        want *= Rational(1, l + 1);
        CHECK(f.entry(l, l) == Scalar(want));
    }

    // f = [p - N] at p = 2: diagonal (qint(2), qint(1), 0) on degrees 0..2
    FockCtx c2 = radical_ctx(1, 2);
    SparseOp g = SparseOp::diagonal(c2.basis, [&](const OccVector& v) {
        return Scalar(QRadical(qint(2 - v.degree())));
    });
    CHECK(g.entry(0, 0) == Scalar(QRadical(qint(2))));
    CHECK(g.entry(1, 1) == Scalar(QRadical(qint(1))));
    CHECK(g.entry(2, 2).is_zero());
}

TEST_CASE("diagonal shift identity f(N) a^± = a^± f(N±1)") {
    // Exact identity on the guarded subspace for arbitrary diagonal f.
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick(-4, 4);
    FockCtx ctx = radical_ctx(2, 3);
    int L = 3;
    for (int trial = 0; trial < 5; ++trial) {
        std::map<std::vector<int>, Rational> table;
        auto f_of = [&](std::vector<int> l) -> Rational {
            auto it = table.find(l);
            if (it == table.end())
                it = table.emplace(l, Rational(pick(rng))).first;
            return it->second;
        };
        for (int j = 1; j <= 2; ++j) {
            SparseOp f = SparseOp::diagonal(ctx.basis, [&](const OccVector& v) {
                return ctx.rational(f_of(v.l));
            });
            SparseOp f_up = SparseOp::diagonal(ctx.basis, [&](const OccVector& v) {
                auto l = v.l;
                l[j - 1] += 1;
                return ctx.rational(f_of(l));
            });
            SparseOp f_dn = SparseOp::diagonal(ctx.basis, [&](const OccVector& v) {
                auto l = v.l;
                l[j - 1] -= 1;
                return l[j - 1] < 0 ? ctx.rational(0) : ctx.rational(f_of(l));
            });
            SparseOp up = raise_op(ctx, j), down = lower_op(ctx, j);
            CHECK((f.compose(up) - up.compose(f_up)).is_zero_on_degrees(L - 1));
            CHECK((f.compose(down) - down.compose(f_dn)).is_zero_on_degrees(L));
        }
    }

    // The named instance: [N_1] a^+ = a^+ [N_1 + 1] on degrees <= L-1.
    SparseOp fn = SparseOp::diagonal(ctx.basis, [&](const OccVector& v) {
        return Scalar(QRadical(qint(v.l[0])));
    });
    SparseOp fn1 = SparseOp::diagonal(ctx.basis, [&](const OccVector& v) {
        return Scalar(QRadical(qint(v.l[0] + 1)));
    });
    SparseOp up = raise_op(ctx, 1);
    CHECK((fn.compose(up) - up.compose(fn1)).is_zero_on_degrees(L - 1));
}

TEST_CASE("q-commutator identities") {
    FockCtx ctx{enumerate_basis(1, 3), Backend::Numeric, Real("0.8")};
    SparseOp a = raise_op(ctx, 1), b = lower_op(ctx, 1);
    Scalar one = ctx.rational(1);
    CHECK(q_commutator(a, a, one).columns().empty());
    // [a^-, a^+] restricted below the cutoff is the identity
    SparseOp c = q_commutator(b, a, one) -
                 SparseOp::identity(ctx.basis, ctx.backend, ctx.q);
    CHECK(c.max_abs_on_degrees(2, ctx.q) < Real("1e-40"));

    // [A,B]_q + q [B,A]_qbar = 0 for random sparse ops
    // (AB - qBA) + q(BA - q^{-1}AB) cancels termwise.
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(-2, 2);
    auto random_op = [&]() {
        SparseOp op(ctx.basis, std::nullopt);
        for (int i = 0; i < ctx.basis->size(); ++i)
            for (int j = 0; j < ctx.basis->size(); ++j)
                op.set_entry(i, j, ctx.rational(pick(rng)));
        return op;
    };
    Scalar qs = Scalar::q_monomial(1, ctx.backend, ctx.q);
    Scalar qbar = Scalar::q_monomial(-1, ctx.backend, ctx.q);
    for (int t = 0; t < 3; ++t) {
        SparseOp A = random_op(), B = random_op();
        SparseOp lhs = q_commutator(A, B, qs) + q_commutator(B, A, qbar).scaled(qs);
        CHECK(lhs.max_abs_on_degrees(3, ctx.q) < Real("1e-40"));
    }
}

TEST_CASE("degree bookkeeping under composition") {
    FockCtx ctx = radical_ctx(2, 2);
    SparseOp up = raise_op(ctx, 1), down = lower_op(ctx, 2);
    CHECK(up.compose(down).degree_shift() == 0);
    CHECK(up.compose(up).degree_shift() == 2);
    CHECK(number_op(ctx, 1).degree_shift() == 0);
    CHECK((up + down).degree_shift() == std::nullopt);  // mixed
}
