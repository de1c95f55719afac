#include <random>

#include <gtest/gtest.h>

#include "gorenstein/apolar.hpp"
#include "gorenstein/resolution.hpp"

using namespace gor;

namespace {

using F = PrimeField;
using Poly = Polynomial<F>;
using Vals = std::vector<long long>;

TEST(Apolar, PowerOfAVariable) {
    auto R = make_ring(F{}, 2);
    auto x = R->var(0), y = R->var(1);
    auto F4 = x.pow(4);
    EXPECT_EQ(apolar_hilbert_values(F4), (Vals{1, 1, 1, 1, 1}));
    auto I = apolar_ideal(R, F4);
    ASSERT_EQ(I.size(), 2u);
    EXPECT_EQ(I.generators()[0], y);
    EXPECT_EQ(I.generators()[1], x.pow(5));
}

TEST(Apolar, BinaryMonomial) {
    auto R = make_ring(F{}, 2);
    auto x = R->var(0), y = R->var(1);
    auto G = x * x * y * y;
    EXPECT_EQ(apolar_hilbert_values(G), (Vals{1, 2, 3, 2, 1}));
    // annihilator of x^2y^2 is <x^3, y^3>
    auto I = apolar_ideal(R, G);
    EXPECT_EQ(I, GradedIdeal<F>(R, {x.pow(3), y.pow(3)}));
    auto h = apolar_hilbert(G);
    EXPECT_EQ(h.dimension, 0);
    EXPECT_EQ(h.reduced_numerator, (IntPoly{1, 2, 3, 2, 1}));
}

TEST(Apolar, CatalecticantShape) {
    auto R = make_ring(F{}, 3);
    std::mt19937_64 rng(3);
    auto G = R->random_form(4, rng);
    auto C = catalecticant(G, 2);
    EXPECT_EQ(C.rows(), 6u);
    EXPECT_EQ(C.cols(), 6u);
    EXPECT_EQ(C.rank(), 6u);
}

TEST(Apolar, SmallCharacteristicRejected) {
    auto R = make_ring(F{3}, 2);
    auto x = R->var(0);
    EXPECT_THROW(apolar_ideal(R, x.pow(3)), FieldError);
    EXPECT_NO_THROW(apolar_ideal(R, x.pow(2)));
}

TEST(Apolar, GenericTernaryQuartic) {
    auto R = make_ring(F{}, 3);
    auto g = generic_form(R, 4, 11);
    EXPECT_TRUE(g.certified);
    EXPECT_EQ(g.hilbert, (Vals{1, 3, 6, 3, 1}));
    auto I = apolar_ideal(R, g.form);
    EXPECT_EQ(I.size(), 7u);
    for (const auto& p : I.generators()) EXPECT_EQ(p.degree(), 3);
    auto T = betti_table(I);
    EXPECT_EQ(T.totals(), (Vals{1, 7, 7, 1}));
    EXPECT_EQ(T.get(1, 3), 7);
    EXPECT_EQ(T.get(2, 4), 7);
    EXPECT_EQ(T.get(3, 7), 1);
}

TEST(Apolar, GenericQuaternaryQuartic) {
    auto R = make_ring(F{}, 4);
    auto g = generic_form(R, 4, 5);
    EXPECT_TRUE(g.certified);
    EXPECT_EQ(g.hilbert, (Vals{1, 4, 10, 4, 1}));
    auto T = betti_table(apolar_ideal(R, g.form));
    EXPECT_EQ(T.totals(), (Vals{1, 16, 30, 16, 1}));
    EXPECT_EQ(T.get(1, 3), 16);
    EXPECT_EQ(T.get(2, 4), 30);
    EXPECT_EQ(T.get(3, 5), 16);
    EXPECT_EQ(T.get(4, 8), 1);
}

// Annihilation, Hilbert symmetry and Gorenstein statistics on random forms.
TEST(ApolarProperty, RandomForms) {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; checked < 1000 && trial < 1100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int d = 2 + static_cast<int>(rng() % (n == 4 ? 2 : 3));
        auto R = make_ring(F{}, n);
        // sparse forms give a spread of Hilbert functions
        std::vector<Poly::Term> terms;
        auto mons = monomials_of_degree(n, d);
        int k = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < k; ++j) terms.push_back({mons[rng() % mons.size()], F{}.random(rng)});
        auto G = Poly::from_terms(F{}, n, terms);
        if (G.is_zero()) continue;
        auto h = apolar_hilbert_values(G);
        for (int e = 0; e <= d; ++e) ASSERT_EQ(h[e], h[d - e]);
        ASSERT_EQ(h[0], 1);
        auto I = apolar_ideal(R, G);
        for (const auto& g : I.generators()) ASSERT_TRUE(diff_apply(g, G).is_zero());
        // an operator kills G exactly when it lies in the apolar ideal
        int e = 1 + static_cast<int>(rng() % d);
        std::vector<Poly::Term> op;
        auto emons = monomials_of_degree(n, e);
        for (int j = 0; j < 2; ++j) op.push_back({emons[rng() % emons.size()], F{}.random(rng)});
        auto D = Poly::from_terms(F{}, n, op);
        ASSERT_EQ(diff_apply(D, G).is_zero(), I.normal_form(D).is_zero()) << "trial " << trial;
        auto from_ideal = I.generators().front() * D;
        ASSERT_TRUE(diff_apply(from_ideal, G).is_zero());
        if (trial % 20 == 0) {
            auto s = table_stats(betti_table(I));
            EXPECT_TRUE(s.is_gorenstein);
            EXPECT_EQ(s.regularity, d);
            EXPECT_EQ(hilbert_series(I).reduced_numerator, IntPoly(h.begin(), h.end()));
        }
        ++checked;
    }
    EXPECT_EQ(checked, 1000);
}

}  // namespace
