#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "polynomial.hpp"

namespace gor {

/// Term order on a graded free module S(-t_0) + ... + S(-t_r).
///
/// Components are grouped into blocks; a term in a higher block is larger
/// than any term in a lower one (used to eliminate the top block when
/// computing syzygies). Inside a block terms compare by total degree
/// (monomial degree + twist), then grevlex, then lower component index first.
class ModuleOrder {
  public:
    ModuleOrder() : twists_{0}, blocks_{0} {}
    explicit ModuleOrder(std::vector<int> twists, std::vector<int> blocks = {})
        : twists_(std::move(twists)), blocks_(std::move(blocks)) {
        if (blocks_.empty()) blocks_.assign(twists_.size(), 0);
        if (blocks_.size() != twists_.size()) throw std::invalid_argument("block/twist size mismatch");
    }

    int rank() const { return static_cast<int>(twists_.size()); }
    int twist(std::uint32_t c) const { return twists_[c]; }
    int block(std::uint32_t c) const { return blocks_[c]; }
    const std::vector<int>& twists() const { return twists_; }
    const std::vector<int>& blocks() const { return blocks_; }
    int degree(const Monomial& m, std::uint32_t c) const { return m.degree() + twists_[c]; }

    int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
        if (blocks_[ca] != blocks_[cb]) return blocks_[ca] > blocks_[cb] ? 1 : -1;
        int da = a.degree() + twists_[ca], db = b.degree() + twists_[cb];
        if (da != db) return da > db ? 1 : -1;
        int g = grevlex_cmp(a, b);
        if (g != 0) return g;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }

    friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;

  private:
    std::vector<int> twists_;
    std::vector<int> blocks_;
};

/// Element of a graded free module: sparse (monomial, component) -> coefficient.
template <CoefficientField F>
struct ModuleVector {
    using Element = typename F::Element;
    struct Term {
        Monomial mon;
        std::uint32_t comp;
        Element coef;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> terms;  // decreasing under the module order

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

struct ModuleMonomialHash {
    std::size_t operator()(const std::pair<Monomial, std::uint32_t>& k) const {
        return k.first.hash() ^ (std::size_t(k.second) * 0x9E3779B97F4A7C15ull);
    }
};

namespace detail {

template <CoefficientField F>
void sort_terms(std::vector<typename ModuleVector<F>::Term>& terms, const ModuleOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return ord.compare(a.mon, a.comp, b.mon, b.comp) > 0; });
}

}  // namespace detail

/// Sorts, merges repeated terms, and drops zeros.
template <CoefficientField F>
ModuleVector<F> make_vector(const F& f, std::vector<typename ModuleVector<F>::Term> terms, const ModuleOrder& ord) {
    detail::sort_terms<F>(terms, ord);
    ModuleVector<F> v;
    for (auto& t : terms) {
        if (!v.terms.empty() && v.terms.back().mon == t.mon && v.terms.back().comp == t.comp)
            v.terms.back().coef = f.add(v.terms.back().coef, t.coef);
        else
            v.terms.push_back(std::move(t));
    }
    std::erase_if(v.terms, [&](const auto& t) { return f.is_zero(t.coef); });
    return v;
}

/// Column vector (p_0, ..., p_r) -> module element.
template <CoefficientField F>
ModuleVector<F> vector_from_polys(const std::vector<Polynomial<F>>& entries, const ModuleOrder& ord,
                                  std::uint32_t offset = 0) {
    std::vector<typename ModuleVector<F>::Term> terms;
    F f{};
    for (std::size_t c = 0; c < entries.size(); ++c) {
        f = entries[c].field();
        for (const auto& t : entries[c].terms()) terms.push_back({t.mon, static_cast<std::uint32_t>(c + offset), t.coef});
    }
    return make_vector(f, std::move(terms), ord);
}

template <CoefficientField F>
std::vector<Polynomial<F>> polys_from_vector(const F& f, int nvars, const ModuleVector<F>& v, int rank,
                                             std::uint32_t offset = 0) {
    std::vector<std::vector<typename Polynomial<F>::Term>> parts(rank);
    for (const auto& t : v.terms) {
        if (t.comp < offset || t.comp >= offset + static_cast<std::uint32_t>(rank)) continue;
        parts[t.comp - offset].push_back({t.mon, t.coef});
    }
    std::vector<Polynomial<F>> out;
    for (auto& p : parts) out.push_back(Polynomial<F>::from_terms(f, nvars, std::move(p)));
    return out;
}

template <CoefficientField F>
ModuleVector<F> add_scaled(const F& f, const ModuleVector<F>& a, const ModuleVector<F>& b,
                           const typename F::Element& s, const ModuleOrder& ord) {
    ModuleVector<F> r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    auto i = a.terms.begin();
    auto j = b.terms.begin();
    while (i != a.terms.end() || j != b.terms.end()) {
        int c = i == a.terms.end() ? -1 : j == b.terms.end() ? 1 : ord.compare(i->mon, i->comp, j->mon, j->comp);
        if (c > 0) {
            r.terms.push_back(*i++);
        } else if (c < 0) {
            r.terms.push_back({j->mon, j->comp, f.mul(j->coef, s)});
            ++j;
        } else {
            auto v = f.add(i->coef, f.mul(j->coef, s));
            if (!f.is_zero(v)) r.terms.push_back({i->mon, i->comp, v});
            ++i;
            ++j;
        }
    }
    return r;
}

/// sum_k polys[k] * vecs[k]
template <CoefficientField F>
ModuleVector<F> linear_combination(const F& f, const std::vector<Polynomial<F>>& polys,
                                   const std::vector<ModuleVector<F>>& vecs, const ModuleOrder& ord) {
    std::unordered_map<std::pair<Monomial, std::uint32_t>, typename F::Element, ModuleMonomialHash> acc;
    for (std::size_t k = 0; k < polys.size(); ++k)
        for (const auto& p : polys[k].terms())
            for (const auto& t : vecs[k].terms) {
                auto [it, ins] = acc.try_emplace({p.mon * t.mon, t.comp}, f.zero());
                it->second = f.add(it->second, f.mul(p.coef, t.coef));
            }
    std::vector<typename ModuleVector<F>::Term> terms;
    for (auto& [k, c] : acc)
        if (!f.is_zero(c)) terms.push_back({k.first, k.second, c});
    return make_vector(f, std::move(terms), ord);
}

/// Degree of a homogeneous vector, or throws.
template <CoefficientField F>
int homogeneous_degree(const ModuleVector<F>& v, const ModuleOrder& ord) {
    if (v.is_zero()) return -1;
    int d = ord.degree(v.terms.front().mon, v.terms.front().comp);
    for (const auto& t : v.terms)
        if (ord.degree(t.mon, t.comp) != d) throw std::invalid_argument("module element is not homogeneous");
    return d;
}

}  // namespace gor
