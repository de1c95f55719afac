#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "groebner.hpp"
#include "hilbert.hpp"
#include "matrix.hpp"

namespace gor {

namespace detail {

template <CoefficientField F>
void check_apolar_input(const Polynomial<F>& form) {
    if (form.is_zero()) throw std::invalid_argument("the dual generator must be nonzero");
    if (!form.is_homogeneous()) throw std::invalid_argument("the dual generator must be homogeneous");
    int d = form.degree();
    if (d < 1) throw std::invalid_argument("the dual generator must have positive degree");
    auto p = form.field().characteristic();
    if (p != 0 && p <= static_cast<std::uint32_t>(d))
        throw FieldError("characteristic " + std::to_string(p) + " does not exceed the degree " + std::to_string(d) +
                         "; factorials vanish");
}

inline std::unordered_map<Monomial, std::size_t, MonomialHash> index_of(const std::vector<Monomial>& mons) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
    for (std::size_t k = 0; k < mons.size(); ++k) idx.emplace(mons[k], k);
    return idx;
}

}  // namespace detail

/// Catalecticant of F in degree e: rows indexed by the monomials of degree
/// d-e, columns by the operators of degree e (both in decreasing grevlex).
template <CoefficientField F>
ExactMatrix<F> catalecticant(const Polynomial<F>& form, int e) {
    detail::check_apolar_input(form);
    const int n = form.nvars(), d = form.degree();
    const F& f = form.field();
    auto ops = monomials_of_degree(n, e);
    auto targets = monomials_of_degree(n, d - e);
    auto row = detail::index_of(targets);
    ExactMatrix<F> M(f, targets.size(), ops.size());
    if (e > d) return M;
    for (std::size_t c = 0; c < ops.size(); ++c) {
        auto image = diff_apply(Polynomial<F>::monomial(f, n, ops[c], f.one()), form);
        for (const auto& t : image.terms()) M.set(row.at(t.mon), c, t.coef);
    }
    return M;
}

/// Minimal generators of the annihilator of F, degree by degree through d+1.
template <CoefficientField F>
GradedIdeal<F> apolar_ideal(const RingPtr<F>& ring, const Polynomial<F>& form) {
    detail::check_apolar_input(form);
    if (form.nvars() != ring->nvars()) throw DimensionError("form lives in a different ring");
    const int n = ring->nvars(), d = form.degree();
    const F& f = ring->field();
    std::vector<Polynomial<F>> gens;
    std::vector<Polynomial<F>> prev_kernel;  // basis of (I_F)_{e-1}
    for (int e = 1; e <= d + 1; ++e) {
        auto mons = monomials_of_degree(n, e);
        auto idx = detail::index_of(mons);
        std::vector<std::vector<typename F::Element>> kernel;
        if (e <= d) {
            kernel = catalecticant(form, e).nullspace();
        } else {
            for (std::size_t k = 0; k < mons.size(); ++k) {
                std::vector<typename F::Element> v(mons.size(), f.zero());
                v[k] = f.one();
                kernel.push_back(std::move(v));
            }
        }
        RowReducer<F> span(f, mons.size());
        for (const auto& k : prev_kernel)
            for (int i = 0; i < n; ++i) {
                std::vector<typename F::Element> v(mons.size(), f.zero());
                for (const auto& t : k.terms()) v[idx.at(t.mon * Monomial::variable(i))] = t.coef;
                span.insert(std::move(v));
            }
        std::vector<Polynomial<F>> this_kernel;
        for (auto& v : kernel) {
            std::vector<typename Polynomial<F>::Term> terms;
            for (std::size_t k = 0; k < mons.size(); ++k)
                if (!f.is_zero(v[k])) terms.push_back({mons[k], v[k]});
            auto p = Polynomial<F>::from_terms(f, n, std::move(terms));
            if (span.insert(v)) gens.push_back(p);
            this_kernel.push_back(std::move(p));
        }
        prev_kernel = std::move(this_kernel);
    }
    return GradedIdeal<F>(ring, std::move(gens));
}

/// Hilbert function of T/I_F from catalecticant ranks, h_e for 0 <= e <= d.
template <CoefficientField F>
std::vector<long long> apolar_hilbert_values(const Polynomial<F>& form) {
    detail::check_apolar_input(form);
    std::vector<long long> h;
    for (int e = 0; e <= form.degree(); ++e) h.push_back(static_cast<long long>(catalecticant(form, e).rank()));
    return h;
}

template <CoefficientField F>
HilbertData apolar_hilbert(const Polynomial<F>& form) {
    auto h = apolar_hilbert_values(form);
    int d = form.degree();
    return hilbert_from_numerator(times_one_minus_t(h, form.nvars()), form.nvars(), d + 1);
}

/// A seeded random form together with the evidence that its apolar Hilbert
/// function is the generic one.
template <CoefficientField F>
struct GenericForm {
    Polynomial<F> form;
    std::vector<long long> hilbert;
    std::uint64_t seed = 0;  // seed that produced `form`
    int attempts = 0;
    bool certified = false;  // two independent seeds agreed
};

/// Draws a random form of degree d; accepts once two independent seeds give
/// the same apolar Hilbert function. After five disagreements the sample
/// with the largest Hilbert function is returned uncertified.
template <CoefficientField F>
GenericForm<F> generic_form(const RingPtr<F>& ring, int d, std::uint64_t seed) {
    auto draw = [&](std::uint64_t s) {
        std::mt19937_64 rng(s);
        return ring->random_form(d, rng);
    };
    auto total = [](const std::vector<long long>& h) {
        long long s = 0;
        for (auto v : h) s += v;
        return s;
    };
    GenericForm<F> best{ring->zero(), {}, seed, 0, false};
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::uint64_t s1 = seed + 2 * static_cast<std::uint64_t>(attempt);
        auto f1 = draw(s1);
        auto f2 = draw(s1 + 1);
        if (f1.is_zero()) continue;
        auto h1 = apolar_hilbert_values(f1);
        auto h2 = f2.is_zero() ? std::vector<long long>{} : apolar_hilbert_values(f2);
        if (h1 == h2) return {f1, h1, s1, attempt + 1, true};
        if (best.hilbert.empty() || total(h1) > total(best.hilbert)) best = {f1, h1, s1, attempt + 1, false};
        if (!h2.empty() && total(h2) > total(best.hilbert)) best = {f2, h2, s1 + 1, attempt + 1, false};
    }
    best.attempts = 5;
    return best;
}

}  // namespace gor
