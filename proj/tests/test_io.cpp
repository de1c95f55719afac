#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gorenstein/io.hpp"

using namespace gor;

namespace {

using F = PrimeField;
using Poly = Polynomial<F>;

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path corpus() { return std::filesystem::path(GOR_SOURCE_DIR) / "data" / "ideals"; }

template <CoefficientField K>
void expect_same(const GradedIdeal<K>& a, const GradedIdeal<K>& b) {
    EXPECT_EQ(a.ring()->names(), b.ring()->names());
    EXPECT_EQ(a.field().name(), b.field().name());
    EXPECT_EQ(a.generators(), b.generators());
}

TEST(ParseIdeal, PrincipalQuadric) {
    auto any = parse_ideal("field GF(32003)\nvars x y\nx^2 + y^2\n");
    auto& I = std::get<GradedIdeal<F>>(any);
    ASSERT_EQ(I.generators().size(), 1u);
    EXPECT_EQ(I.generators().front().degree(), 2);
    auto R = I.ring();
    EXPECT_EQ(I.generators().front(), R->var(0) * R->var(0) + R->var(1) * R->var(1));
}

TEST(ParseIdeal, InhomogeneousNamesTheLine) {
    try {
        parse_ideal("field GF(32003)\nvars x y\nx^2 + y\n");
        FAIL() << "accepted an inhomogeneous generator";
    } catch (const InhomogeneousError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(ParseIdeal, Errors) {
    const std::string head = "field GF(101)\nvars x y z\n";
    auto column_of = [&](const std::string& body) {
        try {
            parse_ideal(head + body);
        } catch (const ParseError& e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair{-1, -1};
    };
    EXPECT_EQ(column_of("2x + y\n"), (std::pair{3, 2}));       // juxtaposition
    EXPECT_EQ(column_of("x * y +\n"), (std::pair{3, 8}));      // dangling operator
    EXPECT_EQ(column_of("(x + y\n"), (std::pair{3, 7}));       // unclosed parenthesis
    EXPECT_EQ(column_of("x ^ y\n"), (std::pair{3, 5}));        // symbolic exponent
    EXPECT_EQ(column_of("x / y\n"), (std::pair{3, 5}));        // division by a variable
    EXPECT_EQ(column_of("x + $\n"), (std::pair{3, 5}));
    EXPECT_EQ(column_of("   x + $  # indented\n"), (std::pair{3, 8}));
    EXPECT_THROW(parse_ideal(head + "x*w\n"), UnknownVariableError);
    EXPECT_THROW(parse_ideal("vars x\nx\n"), ParseError);
    EXPECT_THROW(parse_ideal("field GF(100)\nvars x\nx\n"), ParseError);
    EXPECT_THROW(parse_ideal("field QQ\n"), ParseError);
    EXPECT_THROW(parse_ideal("field QQ\nvars x x\n"), ParseError);
    // blank lines and comments are skipped; line numbers stay those of the file
    try {
        parse_ideal("# header\nfield QQ\n\nvars a b\n\na^2 - b\n");
        FAIL();
    } catch (const InhomogeneousError& e) {
        EXPECT_EQ(e.line(), 6);
    }
}

TEST(ParseIdeal, ArithmeticAndCoefficients) {
    auto I = std::get<GradedIdeal<F>>(parse_ideal("field GF(7)\nvars x y\n(x + y)^2 - 2*x*y\n10*x - 3*y\n-x/2 + y\n"));
    auto R = I.ring();
    auto x = R->var(0), y = R->var(1);
    EXPECT_EQ(I.generators()[0], x * x + y * y);
    EXPECT_EQ(I.generators()[1], x.scaled(3) - y.scaled(3));
    EXPECT_EQ(I.generators()[2], x.scaled(3) + y);  // -1/2 = 3 mod 7
    // large literals reduce modulo p
    auto J = std::get<GradedIdeal<F>>(parse_ideal("field GF(7)\nvars x\n100000000000000000001*x\n"));
    EXPECT_EQ(J.generators()[0], J.ring()->var(0).scaled(3));  // 10^20 + 1 = 3 mod 7
    auto Q = std::get<GradedIdeal<RationalField>>(parse_ideal("field QQ\nvars s t\n3/4*s - t/2\n"));
    EXPECT_EQ(Q.generators()[0].to_string(Q.ring()->names()), "3/4*s - 1/2*t");
}

TEST(ParseIdeal, HunekeUlrichCorpusFile) {
    auto any = parse_ideal(slurp(corpus() / "hunekeulrich.ideal"));
    auto& I = std::get<GradedIdeal<F>>(any);
    EXPECT_EQ(I.nvars(), 21);
    ASSERT_EQ(I.generators().size(), 7u);
    int quadrics = 0, cubics = 0;
    for (const auto& g : I.generators()) {
        quadrics += g.degree() == 2;
        cubics += g.degree() == 3;
    }
    EXPECT_EQ(quadrics, 6);
    EXPECT_EQ(cubics, 1);
}

TEST(RenderIdeal, RoundTripsTheCorpus) {
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(corpus())) {
        auto any = parse_ideal(slurp(entry.path()));
        std::visit(
            [&](const auto& I) {
                auto again = parse_ideal(render_ideal(I));
                using Ideal = std::decay_t<decltype(I)>;
                ASSERT_TRUE(std::holds_alternative<Ideal>(again)) << entry.path();
                expect_same(I, std::get<Ideal>(again));
            },
            any);
        ++files;
    }
    EXPECT_GE(files, 6);
}

TEST(RenderIdeal, RoundTripsRandomIdeals) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + rng() % 4;
        std::vector<Poly> g;
        auto R = make_ring(F{32003}, n, "v");
        for (int k = 0; k < 3; ++k) g.push_back(R->random_form(1 + rng() % 3, rng));
        GradedIdeal<F> I(R, g);
        expect_same(I, std::get<GradedIdeal<F>>(parse_ideal(render_ideal(I))));

        auto Q = make_ring(RationalField{}, n);
        std::vector<Polynomial<RationalField>> h;
        for (int k = 0; k < 2; ++k) {
            auto p = Q->random_form(1 + rng() % 3, rng);
            h.push_back(p.scaled(mpq_class(1, 1 + static_cast<long>(rng() % 9))));
        }
        GradedIdeal<RationalField> J(Q, h);
        expect_same(J, std::get<GradedIdeal<RationalField>>(parse_ideal(render_ideal(J))));
    }
}

TEST(BettiText, Layout) {
    BettiTable T(3);
    T.set(0, 0, 1);
    T.set(1, 3, 7);
    T.set(2, 4, 7);
    T.set(3, 7, 1);
    EXPECT_EQ(render_betti(T),
              "       0 1 2 3\n"
              "total: 1 7 7 1\n"
              "    0: 1 . . .\n"
              "    1: . . . .\n"
              "    2: . 7 7 .\n"
              "    3: . . . .\n"
              "    4: . . . 1\n");
    EXPECT_EQ(render_betti(T, BettiStyle::Wide),
              "        0  1  2  3\n"
              "total:  1  7  7  1\n"
              "    0:  1 -- -- --\n"
              "    1: -- -- -- --\n"
              "    2: --  7  7 --\n"
              "    3: -- -- -- --\n"
              "    4: -- -- --  1\n");
}

TEST(BettiText, RoundTrip) {
    std::mt19937_64 rng(5);
    for (const auto& ct : enumerate_tables()) {
        EXPECT_EQ(parse_betti(render_betti(ct.table)), ct.table) << ct.label;
        EXPECT_EQ(parse_betti(render_betti(ct.table, BettiStyle::Wide)), ct.table) << ct.label;
        EXPECT_EQ(betti_from_json(to_json(ct.table)), ct.table);
    }
    for (int trial = 0; trial < 300; ++trial) {
        BettiTable T;
        int k = rng() % 8;
        for (int e = 0; e < k; ++e) T.set(rng() % 6, rng() % 12, rng() % 1000);
        T.set_truncated(rng() % 2);
        for (auto style : {BettiStyle::Compact, BettiStyle::Wide}) {
            auto back = parse_betti(render_betti(T, style));
            EXPECT_EQ(back, T);
            EXPECT_EQ(back.truncated(), T.truncated());
        }
    }
    EXPECT_THROW(parse_betti("       0 1\n    0: 1 .\n"), ParseError);
    EXPECT_THROW(parse_betti("       0 1\ntotal: 1 3\n    0: 1 .\n    1: . 2\n"), ParseError);
}

TEST(HilbertPolynomial, Coefficients) {
    // k[x,y,z,w]/(x^2, y^2): h(t) = (t+1) + 2t + (t-1) = 4t
    auto R = make_ring(F{}, 4);
    GradedIdeal<F> I(R, {R->var(0) * R->var(0), R->var(1) * R->var(1)});
    EXPECT_EQ(hilbert_polynomial_coefficients(hilbert_series(I)), (std::vector<std::string>{"0", "4"}));
    // twisted cubic: 3t + 1
    auto P = make_ring(F{}, 4);
    auto a = P->var(0), b = P->var(1), c = P->var(2), d = P->var(3);
    GradedIdeal<F> C(P, {a * c - b * b, b * d - c * c, a * d - b * c});
    EXPECT_EQ(hilbert_polynomial_coefficients(hilbert_series(C)), (std::vector<std::string>{"1", "3"}));
    // plane conic in P^2 viewed in 3 variables: 2t + 1; a point in P^3: 1
    auto Q = make_ring(F{}, 3);
    GradedIdeal<F> conic(Q, {Q->var(0) * Q->var(1) - Q->var(2) * Q->var(2)});
    EXPECT_EQ(hilbert_polynomial_coefficients(hilbert_series(conic)), (std::vector<std::string>{"1", "2"}));
    // Fermat quintic: the polynomial agrees with the function from degree 5 on
    auto S = make_ring(F{}, 5);
    Poly q = S->zero();
    for (int i = 0; i < 5; ++i) {
        Poly p = S->var(i);
        for (int e = 1; e < 5; ++e) p = p * S->var(i);
        q += p;
    }
    auto h = hilbert_series(GradedIdeal<F>(S, {q}), 12);
    auto coef = hilbert_polynomial_coefficients(h);
    ASSERT_EQ(coef.size(), 4u);
    for (int t = 5; t <= 12; ++t) {
        mpq_class v = 0, pw = 1;
        for (const auto& c : coef) {
            v += mpq_class(c) * pw;
            pw *= t;
        }
        EXPECT_EQ(v, mpq_class(static_cast<long>(h.values[t]))) << t;
    }
}

}  // namespace
