#include <random>

#include <gtest/gtest.h>

#include "gorenstein/matrix.hpp"
#include "gorenstein/polynomial.hpp"

using namespace gor;

namespace {

using Poly = Polynomial<PrimeField>;

TEST(Field, PrimeArithmetic) {
    PrimeField f(7);
    EXPECT_EQ(f.add(5, 4), 2u);
    EXPECT_EQ(f.mul(3, 5), 1u);
    EXPECT_EQ(f.mul(f.inv(3), 3), 1u);
    EXPECT_EQ(f.from_int(-1), 6u);
    EXPECT_EQ(f.to_string(6), "-1");
    EXPECT_THROW(PrimeField(2), FieldError);
    EXPECT_THROW(PrimeField(9), FieldError);
    EXPECT_THROW(f.inv(0), FieldError);
}

TEST(Field, DescriptorParsing) {
    EXPECT_EQ(FieldDescriptor::parse("GF(32003)").prime, 32003u);
    EXPECT_TRUE(FieldDescriptor::parse("QQ").rational);
    EXPECT_THROW(FieldDescriptor::parse("GF(2)"), FieldError);
    EXPECT_THROW(FieldDescriptor::parse("GF(15)"), FieldError);
    EXPECT_THROW(FieldDescriptor::parse("RR"), FieldError);
}

TEST(Monomial, DivisibilityLcmGcd) {
    Monomial a{2, 1, 0}, b{1, 3, 1};
    EXPECT_FALSE(a.divides(b));
    EXPECT_TRUE(Monomial({1, 1, 0}).divides(b));
    EXPECT_EQ(lcm(a, b), Monomial({2, 3, 1}));
    EXPECT_EQ(gcd(a, b), Monomial({1, 1, 0}));
    EXPECT_FALSE(coprime(a, b));
    EXPECT_TRUE(coprime(Monomial({2, 0, 0}), Monomial({0, 0, 5})));
    EXPECT_EQ((b / Monomial({1, 1, 0})), Monomial({0, 2, 1}));
}

TEST(Monomial, Grevlex) {
    // x > y > z; grevlex: x^2 > xy > y^2 > xz > yz > z^2
    auto ms = monomials_of_degree(3, 2);
    ASSERT_EQ(ms.size(), 6u);
    EXPECT_EQ(ms[0], Monomial({2, 0, 0}));
    EXPECT_EQ(ms[1], Monomial({1, 1, 0}));
    EXPECT_EQ(ms[2], Monomial({0, 2, 0}));
    EXPECT_EQ(ms[3], Monomial({1, 0, 1}));
    EXPECT_EQ(ms[4], Monomial({0, 1, 1}));
    EXPECT_EQ(ms[5], Monomial({0, 0, 2}));
}

TEST(Monomial, ManyVariables) {
    std::vector<int> e(32, 0);
    e[31] = 3;
    e[9] = 2;
    Monomial m(e);
    EXPECT_EQ(m.degree(), 5);
    EXPECT_EQ(m[31], 3);
    EXPECT_TRUE(Monomial::variable(31).divides(m));
    EXPECT_FALSE(Monomial::variable(30).divides(m));
    EXPECT_EQ(m.support_mask(), (1u << 31) | (1u << 9));
}

TEST(DiffApply, Examples) {
    auto R = make_ring(PrimeField{}, std::vector<std::string>{"x", "y"});
    auto x = R->var(0), y = R->var(1);
    EXPECT_EQ(diff_apply(x, x * x * y), (x * y).scaled(2));
    EXPECT_TRUE(diff_apply(x * y, x.pow(4)).is_zero());
    EXPECT_EQ(diff_apply(x * x, x.pow(4)), (x * x).scaled(12));
    auto S = make_ring(PrimeField{}, 3);
    EXPECT_THROW(diff_apply(S->var(0), x), DimensionError);
}

TEST(Polynomial, RingLaws) {
    auto R = make_ring(PrimeField{}, 4);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = R->random_form(2, rng), b = R->random_form(3, rng), c = R->random_form(1, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + b), a * b + a * b);
        EXPECT_EQ((a * b).degree(), 5);
        EXPECT_TRUE((a * b).is_homogeneous());
        EXPECT_LE((long long)(a * b).size(), R->piece_dimension(5));
    }
}

TEST(Polynomial, DiffApplyBilinear) {
    auto R = make_ring(PrimeField{}, 3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto g1 = R->random_form(2, rng), g2 = R->random_form(2, rng);
        auto F1 = R->random_form(4, rng), F2 = R->random_form(4, rng);
        auto s = R->field().random(rng);
        EXPECT_EQ(diff_apply(g1 + g2.scaled(s), F1), diff_apply(g1, F1) + diff_apply(g2, F1).scaled(s));
        EXPECT_EQ(diff_apply(g1, F1 + F2.scaled(s)), diff_apply(g1, F1) + diff_apply(g1, F2).scaled(s));
    }
}

TEST(Polynomial, Substitute) {
    auto R = make_ring(PrimeField{}, 2);
    auto x = R->var(0), y = R->var(1);
    std::vector<Poly> img = {y, x};
    EXPECT_EQ((x * x + x * y.scaled(3)).substitute(img), y * y + x * y.scaled(3));
}

TEST(Matrix, RankExamples) {
    PrimeField f;
    EXPECT_EQ(ExactMatrix<PrimeField>::identity(f, 3).rank(), 3u);
    EXPECT_EQ(ExactMatrix<PrimeField>(f, 4, 7).rank(), 0u);
    RationalField q;
    ExactMatrix<RationalField> m(q, 2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(1, 0, 2);
    m.set(1, 1, 4);
    EXPECT_EQ(m.rank(), 1u);
    EXPECT_EQ(m.rank_sparse(), 1u);
    EXPECT_EQ(m.nullspace().size(), 1u);
}

TEST(Matrix, DenseSparseAgree) {
    PrimeField f(101);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        ExactMatrix<PrimeField> m(f, r, c);
        int fill = rng() % 100;
        // low-rank products mixed in
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (int(rng() % 100) < fill) m.set(i, j, f.random(rng));
        if (trial % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j) m.set(r - 1, j, f.add(m.get(0, j), m.get(1 % r, j)));
        auto rd = m.rank_dense();
        EXPECT_EQ(rd, m.rank_sparse());
        EXPECT_EQ(rd, m.transpose().rank());
        EXPECT_LE(rd, std::min(r, c));
        auto ns = m.nullspace();
        EXPECT_EQ(ns.size(), c - rd);
        for (const auto& v : ns)
            for (std::size_t i = 0; i < r; ++i) {
                auto s = f.zero();
                for (std::size_t j = 0; j < c; ++j) s = f.add(s, f.mul(m.get(i, j), v[j]));
                EXPECT_EQ(s, 0u);
            }
    }
}

}  // namespace
