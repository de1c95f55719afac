#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hilbert.hpp"
#include "resolution.hpp"

namespace gor {

class InfeasibleParameters : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// One of the sixteen Betti tables of an Artinian Gorenstein algebra with
/// codimension 4 and regularity 4, indexed by the number a of quadrics and
/// the counts v = (b, c) of linear first and second syzygies among them.
struct ClassifiedTable {
    std::string label;
    int a = 0, b = 0, c = 0;
    BettiTable table;

    int h2() const { return 10 - a; }
    std::vector<long long> hilbert() const { return {1, 4, 10 - a, 4, 1}; }
};

/// Betti table with rows
///   1: a  b  c
///   2: x  y  x      x = b + 16 - 4a,  y = 2c + 30 - 6a
///   3: c  b  a
/// and 1s at (0,0), (4,8). The middle row is forced by the Hilbert
/// numerator of (1,4,10-a,4,1).
inline BettiTable table_from_parameters(int a, int b, int c) {
    if (a < 0 || a > 6) throw std::out_of_range("a must lie in 0..6");
    if (b < 0 || c < 0) throw InfeasibleParameters("b and c must be nonnegative");
    const long long x = b + 16 - 4 * a, y = 2 * c + 30 - 6 * a;
    if (x < 0 || y < 0)
        throw InfeasibleParameters("parameters (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + ") force a negative Betti number");
    BettiTable T(4);
    T.set(0, 0, 1);
    T.set(1, 2, a);
    T.set(2, 3, b);
    T.set(3, 4, c);
    T.set(1, 3, x);
    T.set(2, 4, y);
    T.set(3, 5, x);
    T.set(1, 4, c);
    T.set(2, 5, b);
    T.set(3, 6, a);
    T.set(4, 8, 1);
    return T;
}

/// The (a, b, c) read back from a table.
inline std::tuple<int, int, int> parameters_of(const BettiTable& T) {
    return {static_cast<int>(T.get(1, 2)), static_cast<int>(T.get(2, 3)), static_cast<int>(T.get(3, 4))};
}

inline std::vector<std::pair<int, int>> feasible_v(int a) {
    switch (a) {
        case 0: return {{0, 0}};
        case 1: return {{0, 0}};
        case 2: return {{0, 0}, {1, 0}};
        case 3: return {{0, 0}, {1, 0}, {2, 0}, {3, 1}};
        case 4: return {{0, 0}, {2, 0}, {3, 0}, {4, 1}};
        case 5: return {{5, 0}, {5, 1}, {6, 2}};
        case 6: return {{8, 3}};
        default: throw std::out_of_range("a must lie in 0..6");
    }
}

namespace detail {

struct LabelEntry {
    int a, b, c;
    const char* label;
};

inline const std::vector<LabelEntry>& label_list() {
    static const std::vector<LabelEntry> list = {
        {0, 0, 0, "CGKK 11"},  {1, 0, 0, "CGKK 9,10"}, {2, 0, 0, "CGKK 7,8"}, {2, 1, 0, "Type 2.1"},
        {3, 0, 0, "CGKK 4"},   {3, 1, 0, "Type 2.2"},  {3, 2, 0, "CGKK 5,6"}, {3, 3, 1, "Type 2.5"},
        {4, 0, 0, "CGKK 3"},   {4, 2, 0, "Type 2.4"},  {4, 3, 0, "Type 2.3"}, {4, 4, 1, "Type 2.6"},
        {5, 5, 0, "CGKK 2"},   {5, 5, 1, "Type 2.7"},  {5, 6, 2, "Type 2.8"}, {6, 8, 3, "CGKK 1"},
    };
    return list;
}

/// Sort key putting CGKK 1..11 first, then Type 2.1..2.8.
inline std::pair<int, double> label_key(const std::string& label) {
    if (label.rfind("CGKK ", 0) == 0) return {0, std::stod(label.substr(5))};
    return {1, std::stod(label.substr(5))};
}

}  // namespace detail

inline std::string label_for(int a, int b, int c) {
    for (const auto& e : detail::label_list())
        if (e.a == a && e.b == b && e.c == c) return e.label;
    return "";
}

/// All sixteen tables, built from feasible_v, in label order.
inline std::vector<ClassifiedTable> enumerate_tables() {
    std::vector<ClassifiedTable> out;
    for (int a = 0; a <= 6; ++a)
        for (auto [b, c] : feasible_v(a)) {
            std::string label = label_for(a, b, c);
            if (label.empty()) throw std::logic_error("feasible parameters without a label");
            out.push_back({label, a, b, c, table_from_parameters(a, b, c)});
        }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return detail::label_key(x.label) < detail::label_key(y.label);
    });
    return out;
}

/// The classified table equal to T entry by entry, if any.
inline std::optional<ClassifiedTable> match_table(const BettiTable& T) {
    if (T.truncated()) return std::nullopt;
    for (auto& ct : enumerate_tables())
        if (ct.table == T) return ct;
    return std::nullopt;
}

/// (b_{2,3}, b_{3,4}) of S/J for every a-subset J of the ten quadratic
/// monomials in four variables.
inline std::set<std::pair<int, int>> monomial_v_survey(int a) {
    if (a < 1 || a > 6) throw std::out_of_range("survey size must lie in 1..6");
    PrimeField f;
    auto ring = make_ring(f, 4);
    auto quads = monomials_of_degree(4, 2);
    std::set<std::pair<int, int>> seen;
    std::vector<int> pick(a);
    for (int i = 0; i < a; ++i) pick[i] = i;
    const int n = static_cast<int>(quads.size());
    while (true) {
        std::vector<Polynomial<PrimeField>> gens;
        for (int i : pick) gens.push_back(ring->monomial(quads[i]));
        auto T = betti_via_koszul(GradedIdeal<PrimeField>(ring, gens), 3, 4);
        seen.insert({static_cast<int>(T.get(2, 3)), static_cast<int>(T.get(3, 4))});
        int k = a - 1;
        while (k >= 0 && pick[k] == n - a + k) --k;
        if (k < 0) break;
        ++pick[k];
        for (int i = k + 1; i < a; ++i) pick[i] = pick[i - 1] + 1;
    }
    return seen;
}

/// Degree range of an arithmetically Gorenstein Calabi-Yau threefold in P^n.
struct DegreeBounds {
    long long lo = 0, hi = 0;
    bool in_range = true;  // the bound is only claimed for 4 <= n <= 15
};

inline DegreeBounds deg_bounds(int n) {
    return {3LL * n - 7, (1LL * n * n - n - 2) / 2, 4 <= n && n <= 15};
}

/// Degree of a threefold in P^n whose Artinian reduction has Hilbert
/// function (1, n-3, h2, n-3, 1).
inline long long deg_from_h2(int n, long long h2) { return 2LL * n - 4 + h2; }

struct ExplainStep {
    std::string claim;
    bool holds = false;
};

/// Re-evaluates the numeric steps behind a table with parameters (a, b, c).
inline std::vector<ExplainStep> explain(int a, int b, int c) {
    std::vector<ExplainStep> steps;
    auto say = [&](bool ok, const std::string& text) { steps.push_back({text, ok}); };
    std::vector<long long> h = {1, 4, 10 - a, 4, 1};
    {
        std::ostringstream s;
        s << "Hilbert function (1,4," << 10 - a << ",4,1) satisfies Macaulay's inequalities";
        say(satisfies_macaulay(h), s.str());
    }
    long long bound3 = macaulay_bound(10 - a, 2);
    long long quot3 = 20 - 4LL * a + b;  // dim (S/I_2)_3 with b linear syzygies
    {
        std::ostringstream s;
        s << "dim (S/I2)_3 = 20 - 4*" << a << " + " << b << " = " << quot3 << " <= " << (10 - a)
          << "^<2> = " << bound3;
        say(quot3 <= bound3, s.str());
    }
    if (quot3 == bound3 && a > 0) {
        std::ostringstream s;
        s << "maximal growth in degree 3: Gotzmann persistence predicts dim (S/I2)_4 = "
          << gotzmann_growth(quot3, 3, 4);
        say(true, s.str());
    }
    BettiTable T;
    bool built = true;
    try {
        T = table_from_parameters(a, b, c);
    } catch (const std::exception&) {
        built = false;
    }
    say(built, "all forced Betti numbers are nonnegative");
    if (built) {
        auto num = times_one_minus_t(IntPoly(h.begin(), h.end()), 4);
        detail::trim_intpoly(num);
        say(T.numerator() == num, "alternating sums reproduce (1-t)^4 (1+4t+h2 t^2+4t^3+t^4)");
        say(has_gorenstein_duality(T, 4, 4), "b_{i,j} = b_{4-i,8-j}");
    }
    say(!(b == 2 && c == 1), "v != (2,1)");
    say(!(a >= 4 && b == 3 && c == 1), "v != (3,1) when a >= 4");
    auto fv = feasible_v(a);
    bool listed = std::find(fv.begin(), fv.end(), std::pair{b, c}) != fv.end();
    say(listed, "v is among the values that occur for a = " + std::to_string(a));
    return steps;
}

}  // namespace gor
