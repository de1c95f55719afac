#include <random>

#include <gtest/gtest.h>

#include "gorenstein/constructions.hpp"
#include "gorenstein/resolution.hpp"

using namespace gor;

namespace {

using F = PrimeField;
using Poly = Polynomial<F>;
using Vals = std::vector<long long>;

TEST(Pfaffian, TwoByTwo) {
    auto R = make_ring(F{}, 1);
    SkewMatrix<F> M(R, 2);
    M.set(0, 1, R->var(0));
    EXPECT_EQ(pfaffian(M), R->var(0));
    EXPECT_THROW(pfaffian(SkewMatrix<F>(R, 3)), std::invalid_argument);
}

TEST(Pfaffian, FourByFourFormula) {
    auto R = make_ring(F{}, 6);
    std::vector<Poly> u;
    for (int i = 0; i < 6; ++i) u.push_back(R->var(i));
    auto M = SkewMatrix<F>::from_upper(R, 4, u);
    // a01 a23 - a02 a13 + a03 a12
    EXPECT_EQ(pfaffian(M), u[0] * u[5] - u[1] * u[4] + u[2] * u[3]);
}

TEST(Pfaffian, RejectsNonSkew) {
    auto R = make_ring(F{}, 2);
    auto x = R->var(0);
    std::vector<std::vector<Poly>> rows = {{R->zero(), x}, {x, R->zero()}};
    EXPECT_THROW(SkewMatrix<F>::from_rows(R, rows), std::invalid_argument);
}

TEST(Determinant, Small) {
    auto R = make_ring(F{}, 4);
    auto a = R->var(0), b = R->var(1), c = R->var(2), d = R->var(3);
    EXPECT_EQ(determinant(R, {{a, b}, {c, d}}), a * d - b * c);
    EXPECT_EQ(minors(R, {{a, b, c}, {b, c, d}}, 2).size(), 3u);
}

// Pf(M)^2 = det(M) for random skew matrices of every even size up to 8.
TEST(PfaffianProperty, SquareIsDeterminant) {
    std::mt19937_64 rng(77);
    auto R = make_ring(F{}, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = 2 * (1 + static_cast<int>(trial % 4));
        std::vector<Poly> up;
        for (int k = 0; k < m * (m - 1) / 2; ++k)
            // linear entries for small sizes, constants for 8 x 8
            up.push_back(m <= 4 ? R->random_form(1, rng) : R->random_form(0, rng));
        auto M = SkewMatrix<F>::from_upper(R, m, up);
        auto p = pfaffian(M);
        ASSERT_EQ(p * p, determinant(R, M.rows())) << "size " << m;
    }
}

TEST(Type24, PfaffianIdentity) {
    std::vector<std::string> names;
    for (int i = 1; i <= 8; ++i) names.push_back("x" + std::to_string(i));
    auto R = make_ring(F{}, names);
    std::mt19937_64 rng(9);
    auto q1 = R->random_form(2, rng), q2 = R->random_form(2, rng), q3 = R->random_form(2, rng);
    auto P = pfaffian_system(type24_matrix(R, q1, q2, q3), 4);
    EXPECT_EQ(P.size(), 5u);
    std::vector<Poly> x;
    for (int i = 0; i < 8; ++i) x.push_back(R->var(i));
    auto J = minors(R, {{x[0], x[1], x[2]}, {x[3], x[4], x[5]}}, 2);
    J.push_back(x[2] * q1 - x[1] * q2 + x[0] * q3);
    J.push_back(x[5] * q1 - x[4] * q2 + x[3] * q3);
    EXPECT_EQ(P, GradedIdeal<F>(R, J));
    // the linear space x1 = ... = x6 = 0 lies on the variety
    EXPECT_TRUE(GradedIdeal<F>(R, {x[0], x[1], x[2], x[3], x[4], x[5]}).contains(P));
    std::vector<F::Element> pt(8, 0);
    pt[6] = 3;
    pt[7] = 17;
    EXPECT_LE(jacobian_rank_at(P, pt), 2u);
    EXPECT_EQ(codimension(P).codim, 3);
}

TEST(Jacobian, Examples) {
    auto R = make_ring(F{}, 3);
    auto x = R->var(0), y = R->var(1), z = R->var(2);
    GradedIdeal<F> Q(R, {x * x + y * y + z * z});
    F f;
    // (3, 4, 5i) with i^2 = -1 does not exist in general; use (0, 1, i) style
    // points: x^2 + y^2 + z^2 = 0 at (1, 1, s) with s^2 = -2
    F::Element s = 0;
    for (F::Element t = 1; t < f.characteristic(); ++t)
        if (f.mul(t, t) == f.neg(f.from_int(2))) {
            s = t;
            break;
        }
    ASSERT_NE(s, 0u);
    std::vector<F::Element> p = {1, 1, s};
    EXPECT_TRUE(f.is_zero(Q.generators()[0].evaluate(p)));
    EXPECT_EQ(jacobian_rank_at(Q, p), 1u);
    GradedIdeal<F> I(R, {x * y, z * z * x, y * y});
    EXPECT_EQ(jacobian_rank_at(I, {0, 0, 0}), 0u);
}

TEST(OneGeneric, Examples) {
    auto R = make_ring(F{}, 6);
    std::vector<Poly> x;
    for (int i = 0; i < 6; ++i) x.push_back(R->var(i));
    EXPECT_TRUE(one_generic_check<F>({{x[0], x[1], x[2]}, {x[3], x[4], x[5]}}, 50, 1).generic);

    auto r = one_generic_check<F>({{x[0], x[1]}, {x[0], x[1]}}, 50, 1);
    ASSERT_FALSE(r.generic);
    F f;
    // the witness really kills an entry: u^T M v = 0
    auto u = r.row_combination, v = r.column_combination;
    std::vector<std::vector<Poly>> M = {{x[0], x[1]}, {x[0], x[1]}};
    Poly e = R->zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e += M[i][j].scaled(f.mul(u[i], v[j]));
    EXPECT_TRUE(e.is_zero());
    EXPECT_EQ(f.add(u[0], u[1]), 0u);

    EXPECT_FALSE(one_generic_check<F>({{x[0], R->zero()}, {R->zero(), x[0]}}, 50, 1).generic);
}

TEST(Named, CompleteIntersection) {
    NamedFamily fam{Family::CompleteIntersection, {2, 2, 2, 2}, 4, 5};
    auto I = build_named(F{}, fam);
    EXPECT_EQ(I.size(), 4u);
    auto T = betti_table(I);
    EXPECT_EQ(T.totals(), (Vals{1, 4, 6, 4, 1}));
    EXPECT_TRUE(has_gorenstein_duality(T, 4, 4));
}

TEST(Named, ReductionPreservesCompleteIntersectionTable) {
    NamedFamily fam{Family::CompleteIntersection, {2, 2, 2, 2}, 8, 3};
    auto I = build_named(F{}, fam);
    auto red = artinian_reduction(I, {1, 1, 1, 1}, 17);
    EXPECT_EQ(red.ideal.nvars(), 4);
    EXPECT_EQ(red.eliminated.size(), 4u);
    EXPECT_TRUE(red.regular);
    auto small = build_named(F{}, NamedFamily{Family::CompleteIntersection, {2, 2, 2, 2}, 4, 3});
    EXPECT_EQ(betti_table(red.ideal), betti_table(small));
}

TEST(Named, ReductionBeforeAndAfter) {
    // Betti table of a non-Artinian complete intersection in 5 variables
    // equals that of its reduction.
    NamedFamily fam{Family::CompleteIntersection, {2, 3}, 5, 8};
    auto I = build_named(F{}, fam);
    auto before = betti_table(I);
    auto red = artinian_reduction(I, {1, 1, 1}, 2);
    EXPECT_EQ(betti_table(red.ideal), before);
}

TEST(Named, ReductionRejectsLongSequences) {
    auto R = make_ring(F{}, 3);
    GradedIdeal<F> I(R, {R->var(0) * R->var(1)});
    EXPECT_THROW(artinian_reduction(I, {1, 1, 1}, 1), std::invalid_argument);
}

TEST(Named, Pfaffian7ToRodlandTable) {
    auto I = build_named(F{}, NamedFamily{Family::Pfaffian7, {}, 0, 4});
    EXPECT_EQ(I.size(), 7u);
    auto red = artinian_reduction(I, {1, 1, 1, 1}, 4);
    EXPECT_EQ(red.ideal.nvars(), 3);
    auto T = betti_table(red.ideal);
    EXPECT_EQ(T.totals(), (Vals{1, 7, 7, 1}));
    EXPECT_EQ(T.get(1, 3), 7);
    EXPECT_EQ(T.get(2, 4), 7);
}

TEST(Named, GulliksenNegard) {
    auto I = build_named(F{}, NamedFamily{Family::GulliksenNegard, {}, 0, 1});
    EXPECT_EQ(I.size(), 16u);
    auto red = artinian_reduction(I, std::vector<int>(12, 1), 6);
    EXPECT_EQ(red.ideal.nvars(), 4);
    auto T = betti_table(red.ideal);
    EXPECT_EQ(T.totals(), (Vals{1, 16, 30, 16, 1}));
    EXPECT_EQ(T.get(1, 3), 16);
    EXPECT_EQ(T.get(2, 4), 30);
    EXPECT_EQ(T.get(3, 5), 16);
    EXPECT_TRUE(has_gorenstein_duality(T, 4, 4));
}

TEST(Named, Pfaffian5Quotients) {
    auto P = build_named(F{}, NamedFamily{Family::Pfaffian5, {}, 0, 1});
    EXPECT_EQ(P.size(), 5u);
    auto cubic = artinian_reduction(P, {3, 1, 1, 1, 1, 1, 1}, 2);
    auto T = betti_table(cubic.ideal);
    EXPECT_EQ(T.totals(), (Vals{1, 6, 10, 6, 1}));
    EXPECT_EQ(T.get(1, 2), 5);
    EXPECT_EQ(T.get(1, 3), 1);
    EXPECT_TRUE(has_gorenstein_duality(T, 4, 4));
    auto mixed = artinian_reduction(P, {2, 2, 1, 1, 1, 1, 1}, 2);
    EXPECT_EQ(betti_table(mixed.ideal).totals(), (Vals{1, 7, 16, 16, 7, 1}));
    EXPECT_TRUE(mixed.regular);
}

TEST(Named, HunekeUlrich) {
    auto I = build_named(F{}, NamedFamily{Family::HunekeUlrich, {}, 0, 1});
    EXPECT_EQ(I.size(), 7u);
    EXPECT_EQ(I.nvars(), 21);
    auto red = artinian_reduction(I, std::vector<int>(16, 1), 3);
    EXPECT_EQ(red.ideal.nvars(), 5);
    auto h = hilbert_series(red.ideal);
    EXPECT_EQ(h.reduced_numerator, (IntPoly{1, 5, 9, 5, 1}));
    EXPECT_EQ(h.multiplicity(), 21);
    EXPECT_EQ(betti_table(red.ideal).totals(), (Vals{1, 7, 22, 22, 7, 1}));
}

}  // namespace
