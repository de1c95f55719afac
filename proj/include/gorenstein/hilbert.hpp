#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "groebner.hpp"

namespace gor {

/// Integer polynomial as a coefficient vector, lowest degree first.
using IntPoly = std::vector<long long>;

namespace detail {

inline void trim_intpoly(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly mul_intpoly(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim_intpoly(r);
    return r;
}

inline void add_shifted(IntPoly& acc, const IntPoly& p, int shift, long long sign = 1) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
    for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += sign * p[i];
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return grevlex_cmp(a, b) > 0;
    });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

/// Numerator of the Hilbert series of S/(gens) over (1-t)^n, by pivoting on
/// a variable: K(I) = K(I + x) + t K(I : x).
inline IntPoly monomial_numerator(std::vector<Monomial> gens, int nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {};
    // base case: pairwise coprime generators
    bool coprime_all = true;
    std::uint32_t seen = 0;
    for (const auto& g : gens) {
        std::uint32_t m = g.support_mask();
        if (m & seen) {
            coprime_all = false;
            break;
        }
        seen |= m;
    }
    if (coprime_all) {
        IntPoly r{1};
        for (const auto& g : gens) {
            IntPoly f(g.degree() + 1, 0);
            f[0] = 1;
            f[g.degree()] = -1;
            r = mul_intpoly(r, f);
        }
        return r;
    }
    // pivot on the variable occurring in the most non-pure-power generators
    std::vector<int> count(nvars, 0);
    for (const auto& g : gens) {
        std::uint32_t m = g.support_mask();
        if (std::popcount(m) < 2) continue;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            ++count[v];
        }
    }
    int var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    if (count[var] == 0) {
        // only pure powers with a repeated variable cannot survive minimalize
        throw std::logic_error("monomial numerator: no pivot found");
    }
    Monomial x = Monomial::variable(var);
    std::vector<Monomial> plus;
    plus.push_back(x);
    for (const auto& g : gens)
        if (g[var] == 0) plus.push_back(g);
    std::vector<Monomial> colon;
    for (const auto& g : gens) colon.push_back(g[var] > 0 ? g / x : g);
    IntPoly r = monomial_numerator(std::move(plus), nvars);
    add_shifted(r, monomial_numerator(std::move(colon), nvars), 1);
    trim_intpoly(r);
    return r;
}

inline mpq_class generalized_binomial(const mpz_class& x, int r) {
    if (r < 0) return 0;
    mpq_class v = 1;
    for (int k = 0; k < r; ++k) v *= mpq_class(x - k) / (k + 1);
    return v;
}

}  // namespace detail

/// Hilbert function, series and polynomial of a graded quotient.
struct HilbertData {
    int nvars = 0;
    std::vector<long long> values;  // h_0 .. h_{t_max}
    IntPoly numerator;              // HS = numerator / (1-t)^nvars
    IntPoly reduced_numerator;      // HS = reduced / (1-t)^dimension
    int dimension = 0;              // Krull dimension
    bool exact_series = true;       // false when only a truncated basis was used

    /// Value of the Hilbert function from the series (any t >= 0).
    long long value(long long t) const {
        if (t < 0) return 0;
        if (dimension == 0) return t < static_cast<long long>(reduced_numerator.size()) ? reduced_numerator[t] : 0;
        long long s = 0;
        for (std::size_t k = 0; k < reduced_numerator.size() && static_cast<long long>(k) <= t; ++k)
            s += reduced_numerator[k] * binomial(t - static_cast<long long>(k) + dimension - 1, dimension - 1);
        return s;
    }

    /// Hilbert polynomial evaluated exactly at any integer, negative included.
    mpq_class polynomial_value(long long t) const {
        if (dimension == 0) return 0;
        mpq_class s = 0;
        for (std::size_t k = 0; k < reduced_numerator.size(); ++k)
            s += mpq_class(static_cast<long>(reduced_numerator[k])) *
                 detail::generalized_binomial(mpz_class(static_cast<long>(t - static_cast<long long>(k) + dimension - 1)),
                                              dimension - 1);
        return s;
    }

    /// Coefficients of the Hilbert polynomial in t, lowest first.
    std::vector<mpq_class> polynomial_coefficients() const {
        // interpolate through dimension points
        int deg = dimension - 1;
        if (deg < 0) return {};
        std::vector<mpq_class> xs, ys;
        for (int k = 0; k <= deg; ++k) {
            xs.push_back(k);
            ys.push_back(polynomial_value(k));
        }
        // Newton divided differences converted to monomial basis
        std::vector<mpq_class> coef(ys);
        for (int j = 1; j <= deg; ++j)
            for (int i = deg; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
        std::vector<mpq_class> poly(deg + 1, 0);
        for (int i = deg; i >= 0; --i) {
            // poly = poly * (t - xs[i]) + coef[i]
            std::vector<mpq_class> next(deg + 1, 0);
            for (int k = 0; k < deg; ++k) {
                next[k + 1] += poly[k];
                next[k] -= poly[k] * xs[i];
            }
            next[0] += coef[i];
            poly = std::move(next);
        }
        return poly;
    }

    /// Degree: h(1) of the reduced numerator.
    long long multiplicity() const {
        long long s = 0;
        for (auto c : reduced_numerator) s += c;
        return s;
    }
};

/// HilbertData from a series numerator over (1-t)^nvars.
inline HilbertData hilbert_from_numerator(IntPoly numerator, int nvars, int t_max) {
    HilbertData h;
    h.nvars = nvars;
    detail::trim_intpoly(numerator);
    h.numerator = numerator;
    IntPoly red = numerator;
    int dim = nvars;
    while (dim > 0 && !red.empty()) {
        long long s = 0;
        for (auto c : red) s += c;
        if (s != 0) break;
        // divide by (1 - t): q_k = sum_{i<=k} red_i
        IntPoly q(red.size() - 1, 0);
        long long acc = 0;
        for (std::size_t k = 0; k + 1 < red.size(); ++k) {
            acc += red[k];
            q[k] = acc;
        }
        red = std::move(q);
        detail::trim_intpoly(red);
        --dim;
    }
    h.reduced_numerator = red;
    h.dimension = red.empty() ? 0 : dim;
    for (int t = 0; t <= t_max; ++t) h.values.push_back(h.value(t));
    return h;
}

/// Hilbert series numerator of S/(monomials).
inline IntPoly monomial_hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
    return detail::monomial_numerator(gens, nvars);
}

/// Full Hilbert data of S/I from its Gröbner basis; values through t_max.
template <CoefficientField F>
HilbertData hilbert_series(const GradedIdeal<F>& I, int t_max = -1) {
    auto num = monomial_hilbert_numerator(I.leading_monomials(), I.nvars());
    if (t_max < 0) t_max = static_cast<int>(num.size());
    return hilbert_from_numerator(std::move(num), I.nvars(), t_max);
}

/// Hilbert function values of S/I for 0 <= t <= t_max from a basis
/// truncated at t_max. The series fields are exact only if no truncation
/// happened.
template <CoefficientField F>
HilbertData hilbert_function(const GradedIdeal<F>& I, int t_max) {
    auto gb = I.truncated_groebner(t_max);
    std::vector<Monomial> leads;
    for (const auto& v : gb.basis) leads.push_back(v.lead().mon);
    auto h = hilbert_from_numerator(monomial_hilbert_numerator(leads, I.nvars()), I.nvars(), t_max);
    // a vanishing value through t_max means the lead ideal is already complete
    bool vanished = std::find(h.values.begin(), h.values.end(), 0LL) != h.values.end();
    h.exact_series = !gb.truncated || vanished;
    return h;
}

/// Numerator over (1-t)^nvars of the cokernel of a module Gröbner basis,
/// as sum over components of t^twist * K(lead ideal in that component).
/// Twists must be nonnegative.
template <CoefficientField F>
IntPoly module_hilbert_numerator(const GroebnerResult<F>& gb) {
    const int r = gb.order.rank();
    std::vector<std::vector<Monomial>> leads(r);
    for (const auto& v : gb.basis) leads[v.lead().comp].push_back(v.lead().mon);
    IntPoly total;
    for (int c = 0; c < r; ++c) {
        int tw = gb.order.twist(c);
        if (tw < 0) throw std::invalid_argument("module Hilbert numerator needs nonnegative twists");
        detail::add_shifted(total, monomial_hilbert_numerator(leads[c], gb.nvars), tw);
    }
    detail::trim_intpoly(total);
    return total;
}

/// Greedy Macaulay representation h = C(a_i, i) + C(a_{i-1}, i-1) + ...
struct BinomialExpansion {
    int index = 0;
    std::vector<std::pair<long long, int>> terms;  // (a_k, k), k decreasing

    long long value() const {
        long long s = 0;
        for (auto [a, k] : terms) s += binomial(a, k);
        return s;
    }
    std::string to_string() const {
        std::string s;
        for (auto [a, k] : terms) {
            if (!s.empty()) s += " + ";
            s += "C(" + std::to_string(a) + "," + std::to_string(k) + ")";
        }
        return s.empty() ? "0" : s;
    }
};

inline BinomialExpansion macaulay_expansion(long long h, int i) {
    if (h < 0 || i < 1) throw std::invalid_argument("macaulay expansion needs h >= 0 and i >= 1");
    BinomialExpansion e;
    e.index = i;
    for (int k = i; k >= 1 && h > 0; --k) {
        long long a = k;
        while (binomial(a + 1, k) <= h) ++a;
        e.terms.push_back({a, k});
        h -= binomial(a, k);
    }
    return e;
}

/// h^<i>: the largest value Macaulay's theorem allows for h_{i+1}.
inline long long macaulay_bound(long long h, int i) {
    long long s = 0;
    for (auto [a, k] : macaulay_expansion(h, i).terms) s += binomial(a + 1, k + 1);
    return s;
}

/// Gotzmann persistence: h_{t+j} when h_t is attained with maximal growth.
inline long long gotzmann_growth(long long h_t, int t, int j) {
    if (j < 0) throw std::invalid_argument("gotzmann growth needs j >= 0");
    long long s = 0;
    for (auto [a, k] : macaulay_expansion(h_t, t).terms) s += binomial(a + j, k + j);
    return s;
}

/// True when h_{i+1} <= h_i^<i> for every i >= 1 in range.
inline bool satisfies_macaulay(const std::vector<long long>& h) {
    for (std::size_t i = 1; i + 1 < h.size(); ++i)
        if (h[i + 1] > macaulay_bound(h[i], static_cast<int>(i))) return false;
    return true;
}

template <CoefficientField F>
long long multiplicity(const GradedIdeal<F>& I) {
    return hilbert_series(I).multiplicity();
}

/// f with f * (1 - t^d) == numerator, if the division is exact.
inline std::optional<IntPoly> numerator_divides(IntPoly num, int d) {
    if (d < 1) throw std::invalid_argument("numerator_divides needs d >= 1");
    detail::trim_intpoly(num);
    if (num.empty()) return IntPoly{};
    if (static_cast<int>(num.size()) <= d) return std::nullopt;
    IntPoly q(num.size() - d, 0);
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = num[k] + (k >= static_cast<std::size_t>(d) ? q[k - d] : 0);
    IntPoly check(num.size(), 0);
    for (std::size_t k = 0; k < q.size(); ++k) {
        check[k] += q[k];
        check[k + d] -= q[k];
    }
    if (check != num) return std::nullopt;
    detail::trim_intpoly(q);
    return q;
}

/// Krull dimension of S/I from the pole order of its Hilbert series.
template <CoefficientField F>
int krull_dimension(const GradedIdeal<F>& I) {
    return hilbert_series(I, 0).dimension;
}

/// (1 - t)^k * p
inline IntPoly times_one_minus_t(IntPoly p, int k) {
    for (int i = 0; i < k; ++i) p = detail::mul_intpoly(p, IntPoly{1, -1});
    return p;
}

}  // namespace gor
