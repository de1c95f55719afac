#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "hilbert.hpp"
#include "resolution.hpp"

namespace gor {

/// Presentation of the conormal module I/I^2: one generator per minimal
/// generator g_k of I, relations the syzygies of the g_k and every g_k e_l.
template <CoefficientField F>
CokernelModule<F> conormal_module(const GradedIdeal<F>& I) {
    auto J = I.trim();
    const auto& gens = J.generators();
    auto syz = syzygy_matrix(J);
    ModuleOrder ord(syz.target_twists);
    std::vector<ModuleVector<F>> rels;
    for (const auto& col : syz.columns) rels.push_back(vector_from_polys(col, ord));
    for (const auto& g : gens)
        for (std::size_t l = 0; l < gens.size(); ++l) {
            std::vector<typename ModuleVector<F>::Term> terms;
            for (const auto& t : g.terms()) terms.push_back({t.mon, static_cast<std::uint32_t>(l), t.coef});
            rels.push_back(make_vector(J.field(), std::move(terms), ord));
        }
    return prune(CokernelModule<F>(J.ring(), syz.target_twists, std::move(rels)));
}

/// I/I^2 as a pruned graded module together with the n of P^n.
template <CoefficientField F>
struct ConormalPresentation {
    CokernelModule<F> module;
    int ambient = 0;

    HilbertData hilbert(int t_max) const { return module.hilbert(t_max); }
};

template <CoefficientField F>
ConormalPresentation<F> conormal_presentation(const GradedIdeal<F>& I) {
    return {conormal_module(I), I.nvars() - 1};
}

/// Hilbert series numerator of I/I^2 over (1-t)^nvars.
template <CoefficientField F>
IntPoly conormal_numerator(const GradedIdeal<F>& I, const GradedIdeal<F>& I2) {
    auto a = hilbert_series(I2).numerator, b = hilbert_series(I).numerator;
    IntPoly d(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) d[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) d[k] -= b[k];
    detail::trim_intpoly(d);
    return d;
}

struct ConormalBetti {
    BettiTable table;
    bool via_section = false;  // computed on a certified generic linear section
};

/// Minimal free resolution of I/I^2.
template <CoefficientField F>
FreeResolution<F> conormal_resolution(const GradedIdeal<F>& I) {
    return minimal_resolution(conormal_module(I));
}

/// Betti table of I/I^2. When S/I has dimension k, the module is first cut
/// by k generic linear forms; the cut is used only if the Hilbert series
/// show the forms are regular on both S/I and I/I^2, in which case the
/// graded Betti numbers agree and Koszul homology of the finite-length
/// section gives them. Otherwise I/I^2 is resolved directly, and the
/// resolution is handed back through `resolution` when asked for.
template <CoefficientField F>
ConormalBetti conormal_betti(const GradedIdeal<F>& I, std::uint64_t seed, const IntPoly* numerator = nullptr,
                             FreeResolution<F>* resolution = nullptr) {
    int dim = hilbert_series(I, 0).dimension;
    IntPoly num = numerator ? *numerator : conormal_numerator(I, ideal_square(I));
    if (dim > 0) {
        auto red = artinian_reduction(I, std::vector<int>(dim, 1), seed);
        const auto& Ib = red.ideal;
        if (red.regular && conormal_numerator(Ib, ideal_square(Ib)) == num) {
            auto M = conormal_module(Ib);
            if (M.finite_length()) {
                auto T = betti_via_koszul(M, M.nvars(), M.top_degree() + M.nvars());
                T.set_nvars(I.nvars());
                return {T, true};
            }
        }
    }
    auto R = conormal_resolution(I);
    ConormalBetti out{R.betti(), false};
    if (resolution) *resolution = std::move(R);
    return out;
}

struct CYInvariants {
    long long chi = 0;
    long long h11 = 0;
    long long h12 = 0;
    std::string method;  // "pd-shortcut" or "ext-direct"
    int pdim = 0;        // projective dimension of I/I^2
    int ambient = 0;     // n for X in P^n
    BettiTable conormal;
    bool section_certified = false;
};

namespace detail {

inline long long to_integer(const mpq_class& q, const char* what) {
    if (q.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer");
    if (!q.get_num().fits_slong_p()) throw std::overflow_error(std::string(what) + " is too large");
    return q.get_num().get_si();
}

template <CoefficientField F>
void require_threefold(const HilbertData& h) {
    if (h.dimension != 4)
        throw std::domain_error("expected a threefold (Krull dimension 4), got Krull dimension " +
                                std::to_string(h.dimension));
}

}  // namespace detail

/// chi(Omega^1_X) = (n+1) HP_{S/I}(-1) - chi(I/I^2), the latter being
/// HP_{S/I^2}(0) - HP_{S/I}(0).
template <CoefficientField F>
long long cy_euler(const GradedIdeal<F>& I) {
    auto h = hilbert_series(I);
    detail::require_threefold<F>(h);
    auto h2 = hilbert_series(ideal_square(I));
    const int n = I.nvars() - 1;
    mpq_class chi = mpq_class(n + 1) * h.polynomial_value(-1) - (h2.polynomial_value(0) - h.polynomial_value(0));
    return detail::to_integer(chi, "Euler characteristic");
}

namespace detail {

template <CoefficientField F>
long long h11_from_resolution(const FreeResolution<F>& R, int n) {
    return ext_graded_piece(R, n - 2, -n - 1) - ext_graded_piece(R, n - 1, -n - 1) + 1;
}

}  // namespace detail

/// h^{1,1} from Ext^{n-2} and Ext^{n-1} of I/I^2 in degree -n-1.
template <CoefficientField F>
long long h11_via_ext(const GradedIdeal<F>& I) {
    return detail::h11_from_resolution(conormal_resolution(I), I.nvars() - 1);
}

/// chi, h^{1,1} and h^{1,2} of the threefold cut out by I, assuming it is a
/// smooth projectively normal Calabi-Yau threefold.
template <CoefficientField F>
CYInvariants hodge_h11_h12(const GradedIdeal<F>& I, std::uint64_t seed) {
    auto h = hilbert_series(I);
    detail::require_threefold<F>(h);
    auto I2 = ideal_square(I);
    auto h2 = hilbert_series(I2);
    CYInvariants out;
    const int n = I.nvars() - 1;
    out.ambient = n;
    mpq_class chi = mpq_class(n + 1) * h.polynomial_value(-1) - (h2.polynomial_value(0) - h.polynomial_value(0));
    out.chi = detail::to_integer(chi, "Euler characteristic");

    auto num = conormal_numerator(I, I2);
    FreeResolution<F> R;
    auto cb = conormal_betti(I, seed, &num, &R);
    out.conormal = cb.table;
    out.section_certified = cb.via_section;
    out.pdim = cb.table.pdim();
    if (out.pdim < n - 2) {
        out.h11 = 1;
        out.method = "pd-shortcut";
    } else {
        out.h11 = detail::h11_from_resolution(cb.via_section ? conormal_resolution(I) : R, n);
        out.method = "ext-direct";
    }
    out.h12 = out.chi + out.h11;
    return out;
}

}  // namespace gor
