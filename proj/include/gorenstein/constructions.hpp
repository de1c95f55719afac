#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "hilbert.hpp"
#include "matrix.hpp"

namespace gor {

/// Raised when a seeded "generic" choice keeps landing in the bad locus.
class GenericityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

template <CoefficientField F>
class SkewMatrix {
  public:
    using Poly = Polynomial<F>;

    SkewMatrix(RingPtr<F> ring, int m) : ring_(std::move(ring)), m_(m), a_(m, std::vector<Poly>(m, ring_->zero())) {}

    /// Entries above the diagonal, row by row: (0,1), (0,2), ..., (m-2,m-1).
    static SkewMatrix from_upper(RingPtr<F> ring, int m, const std::vector<Poly>& upper) {
        if (static_cast<int>(upper.size()) != m * (m - 1) / 2)
            throw std::invalid_argument("need m(m-1)/2 entries above the diagonal");
        SkewMatrix M(std::move(ring), m);
        std::size_t k = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) M.set(i, j, upper[k++]);
        return M;
    }

    static SkewMatrix from_rows(RingPtr<F> ring, const std::vector<std::vector<Poly>>& rows) {
        int m = static_cast<int>(rows.size());
        SkewMatrix M(std::move(ring), m);
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(rows[i].size()) != m) throw std::invalid_argument("matrix is not square");
            if (!rows[i][i].is_zero()) throw std::invalid_argument("skew matrix needs a zero diagonal");
            for (int j = i + 1; j < m; ++j) {
                if (rows[j][i] != -rows[i][j]) throw std::invalid_argument("matrix is not skew-symmetric");
                M.set(i, j, rows[i][j]);
            }
        }
        return M;
    }

    void set(int i, int j, const Poly& p) {
        if (i == j) throw std::invalid_argument("diagonal of a skew matrix is zero");
        a_[i][j] = p;
        a_[j][i] = -p;
    }
    const Poly& operator()(int i, int j) const { return a_[i][j]; }
    int size() const { return m_; }
    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<std::vector<Poly>>& rows() const { return a_; }

  private:
    RingPtr<F> ring_;
    int m_;
    std::vector<std::vector<Poly>> a_;
};

namespace detail {

/// Pfaffians of principal submatrices indexed by bitmasks, memoised.
template <CoefficientField F>
class PfaffianTable {
  public:
    explicit PfaffianTable(const SkewMatrix<F>& M) : M_(M) {}

    const Polynomial<F>& operator()(std::uint32_t mask) {
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        Polynomial<F> result = M_.ring()->zero();
        if (mask == 0) {
            result = M_.ring()->one();
        } else if (std::popcount(mask) % 2 == 0) {
            int first = std::countr_zero(mask);
            std::uint32_t rest = mask & (mask - 1);
            int sign = 1;
            for (std::uint32_t r = rest; r; r &= r - 1) {
                int j = std::countr_zero(r);
                const auto& a = M_(first, j);
                if (!a.is_zero()) {
                    auto term = a * (*this)(rest & ~(1u << j));
                    result = sign > 0 ? result + term : result - term;
                }
                sign = -sign;
            }
        }
        return memo_.emplace(mask, std::move(result)).first->second;
    }

  private:
    const SkewMatrix<F>& M_;
    std::map<std::uint32_t, Polynomial<F>> memo_;
};

}  // namespace detail

/// Pfaffian by expansion along the first row. Odd sizes are rejected.
template <CoefficientField F>
Polynomial<F> pfaffian(const SkewMatrix<F>& M) {
    if (M.size() % 2 != 0) throw std::invalid_argument("Pfaffian of an odd-size matrix");
    if (M.size() > 30) throw DimensionError("matrix too large for a Pfaffian expansion");
    detail::PfaffianTable<F> table(M);
    return table((M.size() == 0 ? 0u : (1u << M.size()) - 1));
}

/// All principal 2k x 2k sub-Pfaffians, in lexicographic order of the
/// retained index sets.
template <CoefficientField F>
GradedIdeal<F> pfaffian_system(const SkewMatrix<F>& M, int size) {
    if (size <= 0 || size % 2 != 0 || size > M.size())
        throw std::invalid_argument("sub-Pfaffian size must be even and at most the matrix size");
    detail::PfaffianTable<F> table(M);
    std::vector<Polynomial<F>> gens;
    const int m = M.size();
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (int i : pick) mask |= 1u << i;
        gens.push_back(table(mask));
        int k = size - 1;
        while (k >= 0 && pick[k] == m - size + k) --k;
        if (k < 0) break;
        ++pick[k];
        for (int i = k + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
    return GradedIdeal<F>(M.ring(), std::move(gens));
}

/// Determinant of a square polynomial matrix, by Laplace expansion along
/// rows with the column subsets memoised.
template <CoefficientField F>
Polynomial<F> determinant(const RingPtr<F>& ring, const std::vector<std::vector<Polynomial<F>>>& A) {
    const int m = static_cast<int>(A.size());
    if (m > 24) throw DimensionError("matrix too large for a Laplace determinant");
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != m) throw std::invalid_argument("determinant of a non-square matrix");
    std::map<std::uint32_t, Polynomial<F>> memo;
    std::function<Polynomial<F>(std::uint32_t)> det = [&](std::uint32_t cols) -> Polynomial<F> {
        int r = m - std::popcount(cols);
        if (r == m) return ring->one();
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        Polynomial<F> acc = ring->zero();
        int sign = 1;
        for (int c = 0; c < m; ++c) {
            if (!(cols & (1u << c))) continue;
            if (!A[r][c].is_zero()) {
                auto term = A[r][c] * det(cols & ~(1u << c));
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return det(m == 0 ? 0u : (1u << m) - 1);
}

/// All k x k minors of a rectangular matrix.
template <CoefficientField F>
std::vector<Polynomial<F>> minors(const RingPtr<F>& ring, const std::vector<std::vector<Polynomial<F>>>& A, int k) {
    const int rows = static_cast<int>(A.size()), cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<Polynomial<F>> out;
    auto subsets = [](int n, int k) {
        std::vector<std::vector<int>> all;
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        if (k > n) return all;
        while (true) {
            all.push_back(pick);
            int j = k - 1;
            while (j >= 0 && pick[j] == n - k + j) --j;
            if (j < 0) break;
            ++pick[j];
            for (int i = j + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
        }
        return all;
    };
    for (const auto& rs : subsets(rows, k))
        for (const auto& cs : subsets(cols, k)) {
            std::vector<std::vector<Polynomial<F>>> sub;
            for (int r : rs) {
                std::vector<Polynomial<F>> row;
                for (int c : cs) row.push_back(A[r][c]);
                sub.push_back(std::move(row));
            }
            out.push_back(determinant(ring, sub));
        }
    return out;
}

enum class Family { CompleteIntersection, Pfaffian7, Pfaffian5, GulliksenNegard, HunekeUlrich, Type24 };

struct NamedFamily {
    Family tag = Family::CompleteIntersection;
    std::vector<int> degrees;  // complete intersections only
    int nvars = 0;             // complete intersections; 0 means one variable per form
    std::uint64_t seed = 1;
};

inline Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> names = {
        {"ci", Family::CompleteIntersection},        {"complete-intersection", Family::CompleteIntersection},
        {"pfaffian7", Family::Pfaffian7},            {"pfaffian5", Family::Pfaffian5},
        {"gulliksen-negard", Family::GulliksenNegard}, {"gn", Family::GulliksenNegard},
        {"huneke-ulrich", Family::HunekeUlrich},     {"hu", Family::HunekeUlrich},
        {"type24", Family::Type24},
    };
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown family '" + name + "'");
    return it->second;
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::CompleteIntersection: return "ci";
        case Family::Pfaffian7: return "pfaffian7";
        case Family::Pfaffian5: return "pfaffian5";
        case Family::GulliksenNegard: return "gulliksen-negard";
        case Family::HunekeUlrich: return "huneke-ulrich";
        case Family::Type24: return "type24";
    }
    return "?";
}

/// Codimension each family is expected to have.
inline int expected_codimension(const NamedFamily& fam) {
    switch (fam.tag) {
        case Family::CompleteIntersection: return static_cast<int>(fam.degrees.size());
        case Family::Pfaffian7:
        case Family::Pfaffian5:
        case Family::Type24: return 3;
        case Family::GulliksenNegard: return 4;
        case Family::HunekeUlrich: return 5;
    }
    return 0;
}

/// The 5 x 5 matrix with rows (0,x1,x2,x3,0), (-x1,0,q1,q2,x4),
/// (-x2,-q1,0,q3,x5), (-x3,-q2,-q3,0,x6), (0,-x4,-x5,-x6,0).
/// The ring needs at least six variables; x1..x6 are the first six.
template <CoefficientField F>
SkewMatrix<F> type24_matrix(const RingPtr<F>& ring, const Polynomial<F>& q1, const Polynomial<F>& q2,
                            const Polynomial<F>& q3) {
    if (ring->nvars() < 6) throw DimensionError("the matrix needs six linear variables");
    SkewMatrix<F> N(ring, 5);
    N.set(0, 1, ring->var(0));
    N.set(0, 2, ring->var(1));
    N.set(0, 3, ring->var(2));
    N.set(1, 2, q1);
    N.set(1, 3, q2);
    N.set(1, 4, ring->var(3));
    N.set(2, 3, q3);
    N.set(2, 4, ring->var(4));
    N.set(3, 4, ring->var(5));
    return N;
}

/// The generic 6 x 6 skew matrix Y (entry (i,j) = -y_ij above the diagonal)
/// and the vector X in the ring y12..y56, x1..x6.
template <CoefficientField F>
RingPtr<F> huneke_ulrich_ring(const F& field) {
    std::vector<std::string> names;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) names.push_back("y" + std::to_string(i) + std::to_string(j));
    for (int i = 1; i <= 6; ++i) names.push_back("x" + std::to_string(i));
    return make_ring(field, std::move(names));
}

template <CoefficientField F>
GradedIdeal<F> huneke_ulrich(const F& field) {
    auto ring = huneke_ulrich_ring(field);
    SkewMatrix<F> Y(ring, 6);
    int k = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) Y.set(i, j, -ring->var(k++));
    std::vector<Polynomial<F>> gens;
    for (int i = 0; i < 6; ++i) {
        auto q = ring->zero();
        for (int j = 0; j < 6; ++j)
            if (!Y(i, j).is_zero()) q += Y(i, j) * ring->var(15 + j);
        gens.push_back(q);
    }
    gens.push_back(pfaffian(Y));
    return GradedIdeal<F>(ring, std::move(gens));
}

namespace detail {

template <CoefficientField F>
Polynomial<F> random_linear(const RingPtr<F>& ring, std::mt19937_64& rng) {
    return ring->random_form(1, rng);
}

template <CoefficientField F>
GradedIdeal<F> build_once(const F& field, const NamedFamily& fam, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    switch (fam.tag) {
        case Family::CompleteIntersection: {
            if (fam.degrees.empty()) throw std::invalid_argument("a complete intersection needs degrees");
            for (int d : fam.degrees)
                if (d < 1) throw std::invalid_argument("complete intersection degrees must be positive");
            int n = fam.nvars > 0 ? fam.nvars : static_cast<int>(fam.degrees.size());
            if (n < static_cast<int>(fam.degrees.size()))
                throw std::invalid_argument("more forms than variables cannot be a regular sequence");
            auto ring = make_ring(field, n);
            std::vector<Polynomial<F>> gens;
            for (int d : fam.degrees) gens.push_back(ring->random_form(d, rng));
            return GradedIdeal<F>(ring, std::move(gens));
        }
        case Family::Pfaffian7: {
            auto ring = make_ring(field, 7);
            std::vector<Polynomial<F>> upper;
            for (int k = 0; k < 21; ++k) upper.push_back(random_linear(ring, rng));
            return pfaffian_system(SkewMatrix<F>::from_upper(ring, 7, upper), 6);
        }
        case Family::Pfaffian5: {
            auto ring = make_ring(field, 10);
            std::vector<Polynomial<F>> upper;
            for (int k = 0; k < 10; ++k) upper.push_back(ring->var(k));
            return pfaffian_system(SkewMatrix<F>::from_upper(ring, 5, upper), 4);
        }
        case Family::GulliksenNegard: {
            auto ring = make_ring(field, 16);
            std::vector<std::vector<Polynomial<F>>> A(4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) A[i].push_back(ring->var(4 * i + j));
            return GradedIdeal<F>(ring, minors(ring, A, 3));
        }
        case Family::HunekeUlrich: return huneke_ulrich(field);
        case Family::Type24: {
            std::vector<std::string> names;
            for (int i = 1; i <= 8; ++i) names.push_back("x" + std::to_string(i));
            auto ring = make_ring(field, std::move(names));
            auto q1 = ring->random_form(2, rng), q2 = ring->random_form(2, rng), q3 = ring->random_form(2, rng);
            return pfaffian_system(type24_matrix(ring, q1, q2, q3), 4);
        }
    }
    throw std::invalid_argument("unknown family");
}

inline bool family_is_random(Family f) {
    return f == Family::CompleteIntersection || f == Family::Pfaffian7 || f == Family::Type24;
}

}  // namespace detail

/// Builds a named family and checks its codimension. Seeded families are
/// redrawn up to five times before giving up.
template <CoefficientField F>
GradedIdeal<F> build_named(const F& field, const NamedFamily& fam, int* reseeds = nullptr) {
    const int want = expected_codimension(fam);
    const int tries = detail::family_is_random(fam.tag) ? 5 : 1;
    for (int r = 0; r < tries; ++r) {
        auto I = detail::build_once(field, fam, fam.seed + static_cast<std::uint64_t>(r));
        auto c = codimension(I);
        if (!c.unit_ideal && c.codim == want) {
            if (reseeds) *reseeds = r;
            return I;
        }
    }
    throw GenericityError(family_name(fam.tag) + ": codimension " + std::to_string(want) + " not reached after " +
                          std::to_string(tries) + " seeds");
}

template <CoefficientField F>
struct Reduction {
    GradedIdeal<F> ideal;              // presented in the remaining variables
    std::vector<Polynomial<F>> forms;  // the adjoined forms, each in the ring current at its step
    std::vector<std::string> eliminated;
    int reseeds = 0;
    bool regular = false;  // Hilbert series identity of a regular sequence holds
};

namespace detail {

/// Adjoins one form; linear forms are solved for their last variable with a
/// nonzero coefficient and that variable is removed from the ring.
template <CoefficientField F>
GradedIdeal<F> adjoin_form(const GradedIdeal<F>& I, const Polynomial<F>& g, std::string* eliminated) {
    const F& f = I.field();
    if (g.degree() != 1) return ideal_add(I, {g});
    const int n = I.nvars();
    int v = -1;
    for (int i = n - 1; i >= 0 && v < 0; --i)
        if (!f.is_zero(g.coefficient(Monomial::variable(i)))) v = i;
    if (v < 0) throw std::invalid_argument("zero linear form");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        if (i != v) names.push_back(I.ring()->names()[i]);
    if (eliminated) *eliminated = I.ring()->names()[v];
    auto ring = make_ring(f, std::move(names));
    auto minus_inv = f.neg(f.inv(g.coefficient(Monomial::variable(v))));
    std::vector<Polynomial<F>> images;
    auto solved = ring->zero();
    for (int i = 0; i < n; ++i) {
        if (i == v) continue;
        auto c = g.coefficient(Monomial::variable(i));
        solved += ring->var(i < v ? i : i - 1).scaled(f.mul(c, minus_inv));
    }
    for (int i = 0; i < n; ++i) images.push_back(i == v ? solved : ring->var(i < v ? i : i - 1));
    std::vector<Polynomial<F>> gens;
    for (const auto& p : I.generators()) gens.push_back(p.substitute(images));
    return GradedIdeal<F>(ring, std::move(gens));
}

}  // namespace detail

/// Quotient by seeded generic forms of the given degrees. Each form must
/// lower the Krull dimension by exactly one; a failing form is redrawn up to
/// five times. Linear forms eliminate a variable.
template <CoefficientField F>
Reduction<F> artinian_reduction(const GradedIdeal<F>& I, const std::vector<int>& degrees, std::uint64_t seed) {
    for (int d : degrees)
        if (d < 1) throw std::invalid_argument("regular sequence degrees must be positive");
    auto start = hilbert_series(I, 0);
    const int dim0 = start.dimension;
    if (static_cast<int>(degrees.size()) > dim0)
        throw std::invalid_argument("sequence longer than the Krull dimension " + std::to_string(dim0));

    auto run = [&](std::vector<int> redraws, bool verify_each, int* failed_step) {
        Reduction<F> out{I, {}, {}, 0, false};
        int dim = dim0;
        for (std::size_t k = 0; k < degrees.size(); ++k) {
            std::mt19937_64 rng(seed + 7919 * k + 104729 * static_cast<std::uint64_t>(redraws[k]));
            auto g = out.ideal.ring()->random_form(degrees[k], rng);
            std::string gone;
            auto next = detail::adjoin_form(out.ideal, g, &gone);
            if (verify_each) {
                int nd = hilbert_series(next, 0).dimension;
                if (nd != dim - 1) {
                    *failed_step = static_cast<int>(k);
                    return out;
                }
                dim = nd;
            }
            out.forms.push_back(g);
            if (!gone.empty()) out.eliminated.push_back(gone);
            out.ideal = std::move(next);
        }
        *failed_step = -1;
        return out;
    };

    std::vector<int> redraws(degrees.size(), 0);
    int failed = -1;
    // Each form lowers the dimension by at most one, so the final dimension
    // certifies every step at once; step-by-step checks only on failure.
    auto out = run(redraws, false, &failed);
    auto end = hilbert_series(out.ideal, 0);
    if (end.dimension != dim0 - static_cast<int>(degrees.size())) {
        int total = 0;
        while (true) {
            out = run(redraws, true, &failed);
            if (failed < 0) break;
            if (++redraws[failed] >= 5) throw GenericityError("no dimension-lowering form found after 5 draws");
            ++total;
        }
        out.reseeds = total;
        end = hilbert_series(out.ideal, 0);
    }
    IntPoly expect = start.numerator;
    for (int d : degrees)
        if (d > 1) {
            IntPoly f(d + 1, 0);
            f[0] = 1;
            f[d] = -1;
            expect = detail::mul_intpoly(expect, f);
        }
    detail::trim_intpoly(expect);
    out.regular = expect == end.numerator;
    return out;
}

/// Rank of the Jacobian of the generators at a point.
template <CoefficientField F>
std::size_t jacobian_rank_at(const GradedIdeal<F>& I, const std::vector<typename F::Element>& point) {
    if (static_cast<int>(point.size()) != I.nvars()) throw DimensionError("point has the wrong number of coordinates");
    ExactMatrix<F> J(I.field(), I.size(), I.nvars());
    for (std::size_t r = 0; r < I.size(); ++r)
        for (int v = 0; v < I.nvars(); ++v) J.set(r, v, I.generators()[r].partial(v).evaluate(point));
    return J.rank();
}

template <CoefficientField F>
struct OneGenericResult {
    bool generic = true;  // no witness found
    std::vector<typename F::Element> row_combination, column_combination;
};

/// Looks for scalar vectors u, v with u^T M v = 0. A zero entry, a
/// dependency among the rows or columns, or a degenerate random row or
/// column combination all yield a witness. `true` only means none was found.
template <CoefficientField F>
OneGenericResult<F> one_generic_check(const std::vector<std::vector<Polynomial<F>>>& M, int trials,
                                      std::uint64_t seed) {
    using Element = typename F::Element;
    OneGenericResult<F> res;
    const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    if (rows == 0 || cols == 0) return res;
    const F& f = M[0][0].field();
    const int n = M[0][0].nvars();
    for (const auto& row : M)
        for (const auto& e : row)
            if (!e.is_zero() && e.degree() != 1) throw std::invalid_argument("entries must be linear forms");
    auto unit = [&](std::size_t len, std::size_t k) {
        std::vector<Element> e(len, f.zero());
        e[k] = f.one();
        return e;
    };
    auto coef = [&](const Polynomial<F>& p, int var) { return p.coefficient(Monomial::variable(var)); };

    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (M[i][j].is_zero()) return {false, unit(rows, i), unit(cols, j)};

    // kernel of the map u -> u^T M (rows) and v -> M v (columns)
    ExactMatrix<F> R(f, cols * n, rows), C(f, rows * n, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (int v = 0; v < n; ++v) {
                R.set(j * n + v, i, coef(M[i][j], v));
                C.set(i * n + v, j, coef(M[i][j], v));
            }
    if (auto k = R.nullspace(); !k.empty()) return {false, k.front(), unit(cols, 0)};
    if (auto k = C.nullspace(); !k.empty()) return {false, unit(rows, 0), k.front()};

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Element> u(rows), w(cols);
        for (auto& x : u) x = f.random(rng);
        for (auto& x : w) x = f.random(rng);
        // u^T M is a row of linear forms; dependent forms give v
        ExactMatrix<F> A(f, n, cols), B(f, n, rows);
        for (std::size_t j = 0; j < cols; ++j)
            for (int v = 0; v < n; ++v) {
                Element s = f.zero();
                for (std::size_t i = 0; i < rows; ++i) s = f.add(s, f.mul(u[i], coef(M[i][j], v)));
                A.set(v, j, s);
            }
        if (auto k = A.nullspace(); !k.empty()) return {false, u, k.front()};
        for (std::size_t i = 0; i < rows; ++i)
            for (int v = 0; v < n; ++v) {
                Element s = f.zero();
                for (std::size_t j = 0; j < cols; ++j) s = f.add(s, f.mul(w[j], coef(M[i][j], v)));
                B.set(v, i, s);
            }
        if (auto k = B.nullspace(); !k.empty()) return {false, k.front(), w};
    }
    return res;
}

}  // namespace gor
