#include <random>

#include <gtest/gtest.h>

#include "gorenstein/groebner.hpp"

using namespace gor;

namespace {

using F = PrimeField;
using Poly = Polynomial<F>;

struct XY : ::testing::Test {
    RingPtr<F> R = make_ring(F{}, std::vector<std::string>{"x", "y"});
    Poly x = R->var(0), y = R->var(1);
};

TEST_F(XY, MonomialIdealIsItsOwnBasis) {
    GradedIdeal<F> I(R, {x * x, x * y});
    auto gb = I.groebner_basis();
    ASSERT_EQ(gb.size(), 2u);
    EXPECT_EQ(gb[0], x * y);
    EXPECT_EQ(gb[1], x * x);
}

TEST_F(XY, LinearCombinationLeads) {
    GradedIdeal<F> I(R, {x * x - y * y, x * x + y * y});
    auto leads = I.leading_monomials();
    ASSERT_EQ(leads.size(), 2u);
    EXPECT_EQ(leads[0], Monomial({0, 2}));
    EXPECT_EQ(leads[1], Monomial({2, 0}));
}

TEST_F(XY, NormalForms) {
    GradedIdeal<F> I(R, {x * x, x * y});
    EXPECT_TRUE(I.normal_form(x * x).is_zero());
    EXPECT_EQ(I.normal_form(y * y), y * y);
    GradedIdeal<F> J(R, {x * x});
    EXPECT_EQ(J.normal_form(x * x * y + y * y * y), y * y * y);
}

TEST_F(XY, Quotients) {
    GradedIdeal<F> I(R, {x * x, x * y});
    auto Q = ideal_quotient(I, x);
    EXPECT_EQ(Q, GradedIdeal<F>(R, {x, y}));
    GradedIdeal<F> J(R, {x * x});
    EXPECT_EQ(ideal_quotient(J, y), J);
    EXPECT_THROW(ideal_quotient(J, R->zero()), std::invalid_argument);
}

TEST_F(XY, KoszulSyzygy) {
    GradedIdeal<F> I(R, {x * x, y * y});
    auto S = syzygy_matrix(I);
    ASSERT_EQ(S.columns.size(), 1u);
    EXPECT_EQ(S.source_twists[0], 4);
    const auto& c = S.columns[0];
    EXPECT_TRUE((c[0] * x * x + c[1] * y * y).is_zero());
    EXPECT_EQ(c[0].lead_monomial(), Monomial({0, 2}));
}

TEST(Groebner, DeterminantalSyzygies) {
    auto R = make_ring(F{}, 6);
    auto v = [&](int i) { return R->var(i); };
    // 2x2 minors of [[x0,x1,x2],[x3,x4,x5]]
    std::vector<Poly> minors = {v(0) * v(4) - v(1) * v(3), v(0) * v(5) - v(2) * v(3), v(1) * v(5) - v(2) * v(4)};
    GradedIdeal<F> I(R, minors);
    auto S = syzygy_matrix(I);
    ASSERT_EQ(S.columns.size(), 2u);
    for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_EQ(S.source_twists[k], 3);
        Poly sum = R->zero();
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_LE(S.columns[k][j].degree(), 1);
            sum += S.columns[k][j] * minors[j];
        }
        EXPECT_TRUE(sum.is_zero());
    }
}

TEST(Groebner, GenericQuadricsHilbertFunction) {
    auto R = make_ring(F{}, 4);
    std::mt19937_64 rng(2024);
    std::vector<Poly> q;
    for (int i = 0; i < 4; ++i) q.push_back(R->random_form(2, rng));
    GradedIdeal<F> I(R, q);
    auto leads = I.leading_monomials();
    // count standard monomials per degree
    std::vector<int> hf;
    for (int d = 0; d <= 5; ++d) {
        int c = 0;
        for (const auto& m : monomials_of_degree(4, d)) {
            bool in = false;
            for (const auto& l : leads) in = in || l.divides(m);
            c += !in;
        }
        hf.push_back(c);
    }
    EXPECT_EQ(hf, (std::vector<int>{1, 4, 6, 4, 1, 0}));
}

TEST(Groebner, BuchbergerCriterionRandom) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + rng() % 3;
        auto R = make_ring(F{101}, n);
        std::vector<Poly> g;
        int k = 1 + rng() % 4;
        for (int i = 0; i < k; ++i) g.push_back(R->random_form(1 + rng() % 3, rng));
        GradedIdeal<F> I(R, g);
        const auto& gb = I.groebner_basis();
        for (std::size_t i = 0; i < gb.size(); ++i) {
            EXPECT_TRUE(gb[i].lead_coefficient() == 1u);
            for (std::size_t j = i + 1; j < gb.size(); ++j) {
                Monomial l = lcm(gb[i].lead_monomial(), gb[j].lead_monomial());
                auto s = gb[i].times_monomial(l / gb[i].lead_monomial(), 1) -
                         gb[j].times_monomial(l / gb[j].lead_monomial(), 1);
                EXPECT_TRUE(I.normal_form(s).is_zero());
            }
        }
        for (const auto& p : g) EXPECT_TRUE(I.contains(p));
        // linearity of normal forms
        auto a = R->random_form(3, rng), b = R->random_form(3, rng);
        EXPECT_EQ(I.normal_form(a + b), I.normal_form(a) + I.normal_form(b));
        // idempotence
        EXPECT_EQ(groebner_basis(groebner_basis(I)).generators(), gb);
    }
}

TEST(Groebner, RationalField) {
    auto R = make_ring(RationalField{}, 3);
    auto x = R->var(0), y = R->var(1), z = R->var(2);
    GradedIdeal<RationalField> I(R, {x * y - z * z, x * z.scaled(3) - y * y});
    for (const auto& g : I.generators()) EXPECT_TRUE(I.contains(g));
    EXPECT_FALSE(I.contains(x * x));
    EXPECT_EQ(codimension(I).codim, 2);
}

TEST(Groebner, Codimension) {
    auto R = make_ring(F{}, 4);
    auto x = R->var(0), y = R->var(1);
    EXPECT_EQ(codimension(GradedIdeal<F>(R, {x * x, y * y})).codim, 2);
    auto u = codimension(GradedIdeal<F>(R, {R->one()}));
    EXPECT_TRUE(u.unit_ideal);
    EXPECT_EQ(u.codim, 4);
    EXPECT_EQ(codimension(GradedIdeal<F>(R, {})).codim, 0);
}

TEST(Groebner, TrimDropsRedundantGenerators) {
    auto R = make_ring(F{}, 3);
    auto x = R->var(0), y = R->var(1), z = R->var(2);
    GradedIdeal<F> I(R, {x * y, x * y * z, y * y, x * y + y * y, z * z * z});
    auto T = I.trim();
    EXPECT_EQ(T.size(), 3u);
    EXPECT_EQ(T, I);
}

TEST(Groebner, TruncatedBasis) {
    auto R = make_ring(F{}, 3);
    std::mt19937_64 rng(5);
    GradedIdeal<F> I(R, {R->random_form(2, rng), R->random_form(2, rng), R->random_form(3, rng)});
    auto t = I.truncated_groebner(2);
    EXPECT_TRUE(t.truncated);
    for (const auto& v : t.basis) EXPECT_LE(v.lead().mon.degree(), 2);
}

}  // namespace
