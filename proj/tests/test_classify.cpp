#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "gorenstein/apolar.hpp"
#include "gorenstein/classify.hpp"
#include "reference_tables.hpp"

using namespace gor;

namespace {

using F = PrimeField;
using Vals = std::vector<long long>;

using testing_reference::reference_tables;

TEST(Classify, SixteenTablesMatchReference) {
    auto ref = reference_tables();
    ASSERT_EQ(ref.size(), 16u);
    auto all = enumerate_tables();
    ASSERT_EQ(all.size(), 16u);
    std::vector<int> per_a(7, 0);
    for (const auto& ct : all) {
        ASSERT_TRUE(ref.count(ct.label)) << ct.label;
        EXPECT_EQ(ct.table, ref.at(ct.label)) << ct.label;
        ++per_a[ct.a];
    }
    EXPECT_EQ(per_a, (std::vector<int>{1, 1, 2, 4, 4, 3, 1}));
}

TEST(Classify, EveryTableIsGorensteinWithTheRightNumerator) {
    for (const auto& ct : enumerate_tables()) {
        auto s = table_stats(ct.table);
        EXPECT_EQ(s.regularity, 4);
        EXPECT_EQ(s.pdim, 4);
        EXPECT_TRUE(s.is_gorenstein);
        EXPECT_TRUE(has_gorenstein_duality(ct.table, 4, 4));
        auto h = ct.hilbert();
        auto num = times_one_minus_t(IntPoly(h.begin(), h.end()), 4);
        EXPECT_EQ(ct.table.numerator(), num) << ct.label;
        auto [a, b, c] = parameters_of(ct.table);
        EXPECT_EQ(a, ct.a);
        EXPECT_EQ(b, ct.b);
        EXPECT_EQ(c, ct.c);
    }
}

TEST(Classify, ParameterExamples) {
    auto T = table_from_parameters(3, 0, 0);
    EXPECT_EQ(T.row(2), (Vals{0, 4, 12, 4, 0}));
    auto U = table_from_parameters(5, 6, 2);
    EXPECT_EQ(U.row(1), (Vals{0, 5, 6, 2, 0}));
    EXPECT_EQ(U.row(2), (Vals{0, 2, 4, 2, 0}));
    EXPECT_EQ(U.row(3), (Vals{0, 2, 6, 5, 0}));
    EXPECT_EQ(table_from_parameters(6, 8, 3).row(2), (Vals{0, 0, 0, 0, 0}));
    EXPECT_THROW(table_from_parameters(6, 0, 0), InfeasibleParameters);
    EXPECT_THROW(table_from_parameters(7, 0, 0), std::out_of_range);
}

TEST(Classify, ExcludedParametersNeverAppear) {
    for (const auto& ct : enumerate_tables()) {
        EXPECT_FALSE(ct.b == 2 && ct.c == 1);
        EXPECT_FALSE(ct.a >= 4 && ct.b == 3 && ct.c == 1);
    }
}

TEST(Classify, MatchTable) {
    auto R = make_ring(F{}, 4);
    std::vector<Polynomial<F>> sq;
    for (int i = 0; i < 4; ++i) sq.push_back(R->var(i) * R->var(i));
    auto m = match_table(betti_table(GradedIdeal<F>(R, sq)));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->label, "CGKK 3");
    auto g = generic_form(R, 4, 21);
    auto q = match_table(betti_table(apolar_ideal(R, g.form)));
    ASSERT_TRUE(q);
    EXPECT_EQ(q->label, "CGKK 11");
    // CGKK 2 and Type 2.4 share totals but not entries
    auto c2 = match_table(table_from_parameters(5, 5, 0));
    auto t24 = match_table(table_from_parameters(4, 2, 0));
    EXPECT_EQ(c2->label, "CGKK 2");
    EXPECT_EQ(t24->label, "Type 2.4");
    EXPECT_FALSE(match_table(table_from_parameters(3, 2, 1)));
}

TEST(Survey, MonomialTriples) {
    auto s = monomial_v_survey(3);
    EXPECT_EQ(s, (std::set<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}, {3, 1}}));
    EXPECT_EQ(monomial_v_survey(1), (std::set<std::pair<int, int>>{{0, 0}}));
    EXPECT_EQ(monomial_v_survey(2), (std::set<std::pair<int, int>>{{0, 0}, {1, 0}}));
    // every feasible a = 3 value shows up among monomial ideals
    for (auto v : feasible_v(3)) EXPECT_TRUE(s.count(v));
}

TEST(Bounds, Degrees) {
    auto b = deg_bounds(7);
    EXPECT_EQ(b.lo, 14);
    EXPECT_EQ(b.hi, 20);
    EXPECT_TRUE(b.in_range);
    EXPECT_EQ(deg_bounds(8).lo, 17);
    EXPECT_EQ(deg_bounds(8).hi, 27);
    EXPECT_FALSE(deg_bounds(16).in_range);
    EXPECT_EQ(deg_from_h2(8, 9), 21);
    // a threefold in P^7 with quadric count a has degree 20 - a
    for (const auto& ct : enumerate_tables()) EXPECT_EQ(deg_from_h2(7, ct.h2()), 20 - ct.a);
}

TEST(Explain, ReportsEachStep) {
    auto steps = explain(3, 3, 1);
    for (const auto& s : steps) EXPECT_TRUE(s.holds) << s.claim;
    auto bad = explain(4, 3, 1);
    bool some_fail = false;
    for (const auto& s : bad) some_fail |= !s.holds;
    EXPECT_TRUE(some_fail);
}

}  // namespace
