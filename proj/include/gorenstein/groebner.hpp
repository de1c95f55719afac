#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "module.hpp"
#include "polynomial.hpp"

namespace gor {

struct GroebnerOptions {
    /// Pairs and inputs above this degree are skipped and the result is
    /// flagged as truncated.
    int max_degree = std::numeric_limits<int>::max();
};

/// Reduced Gröbner basis of a graded submodule of a free module.
template <CoefficientField F>
struct GroebnerResult {
    F field;
    int nvars = 0;
    ModuleOrder order;
    std::vector<ModuleVector<F>> basis;  // monic, increasing leads
    std::vector<char> minimal_input;     // per input: part of a minimal generating set
    bool truncated = false;
    int max_degree = std::numeric_limits<int>::max();
};

namespace detail {

template <CoefficientField F>
struct BasisElement {
    ModuleVector<F> vec;
    Monomial lead;
    std::uint32_t comp = 0;
    std::uint32_t mask = 0;
};

template <CoefficientField F>
class ReducerTable {
  public:
    void add(std::size_t idx, const BasisElement<F>& e) {
        if (by_comp_.size() <= e.comp) by_comp_.resize(e.comp + 1);
        by_comp_[e.comp].push_back(idx);
    }

    /// Index of an element whose lead divides (m, comp), or -1.
    long find(const std::vector<BasisElement<F>>& elems, const Monomial& m, std::uint32_t comp) const {
        if (comp >= by_comp_.size()) return -1;
        std::uint32_t mm = m.support_mask();
        for (std::size_t idx : by_comp_[comp]) {
            const auto& e = elems[idx];
            if ((e.mask & ~mm) != 0) continue;
            if (e.lead.divides(m)) return static_cast<long>(idx);
        }
        return -1;
    }

  private:
    std::vector<std::vector<std::size_t>> by_comp_;
};

/// One homogeneous slice of row reduction in the style of F4: a set of
/// target vectors is reduced against monomial multiples of basis elements
/// chosen by symbolic preprocessing.
template <CoefficientField F>
class Batch {
  public:
    using Element = typename F::Element;
    using Vec = ModuleVector<F>;

    Batch(const F& f, const ModuleOrder& ord, const std::vector<BasisElement<F>>& elems,
          const ReducerTable<F>& table)
        : f_(f), ord_(ord), elems_(elems), table_(table) {}

    /// Adds mult * elems[e]. The first row with a given lead becomes a
    /// reducer, later ones are reduced.
    void add_multiple(const Monomial& mult, std::size_t e) {
        Source s{mult, e, nullptr, {}};
        register_row(s);
        std::uint32_t lead = s.cols.front();
        if (col_pivot_[lead] < 0) {
            col_pivot_[lead] = static_cast<long>(pivots_.size());
            pivots_.push_back(std::move(s));
        } else {
            targets_.push_back(std::move(s));
        }
    }

    void add_target(const Vec& v) {
        owned_.push_back(std::make_unique<Vec>(v));
        Source s{Monomial{}, 0, owned_.back().get(), {}};
        if (!v.is_zero()) register_row(s);
        targets_.push_back(std::move(s));
    }

    /// Reduces every target, in insertion order. With `accumulate` each
    /// nonzero result is normalised and used as a pivot for later targets;
    /// otherwise results are the full normal forms.
    std::vector<Vec> reduce(bool accumulate) {
        preprocess();
        const std::size_t ncols = cols_.size();
        std::vector<std::uint32_t> perm(ncols);
        std::iota(perm.begin(), perm.end(), 0u);
        std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
            return ord_.compare(cols_[a].first, cols_[a].second, cols_[b].first, cols_[b].second) > 0;
        });
        std::vector<std::uint32_t> pos(ncols);
        for (std::uint32_t i = 0; i < ncols; ++i) pos[perm[i]] = i;

        std::vector<Row> pivot(ncols);
        for (auto& s : pivots_) {
            Row r = to_row(s, pos);
            std::uint32_t lead = r.cols.front();
            pivot[lead] = std::move(r);
        }

        std::vector<Vec> out;
        out.reserve(targets_.size());
        Accumulator acc(f_, ncols);
        for (auto& s : targets_) {
            if (s.cols.empty()) {
                out.emplace_back();
                continue;
            }
            Row r = to_row(s, pos);
            Row res = acc.reduce(r, pivot);
            if (accumulate && !res.cols.empty()) {
                Element inv = f_.inv(res.coefs.front());
                for (auto& c : res.coefs) c = f_.mul(c, inv);
                pivot[res.cols.front()] = res;
            }
            Vec v;
            v.terms.reserve(res.cols.size());
            for (std::size_t k = 0; k < res.cols.size(); ++k) {
                const auto& col = cols_[perm[res.cols[k]]];
                v.terms.push_back({col.first, col.second, res.coefs[k]});
            }
            out.push_back(std::move(v));
        }
        return out;
    }

  private:
    struct Source {
        Monomial mult;
        std::size_t elem;
        const Vec* vec;  // explicit target, else mult * elems[elem]
        std::vector<std::uint32_t> cols;
    };
    struct Row {
        std::vector<std::uint32_t> cols;  // increasing = decreasing terms
        std::vector<Element> coefs;
    };

    /// Dense accumulator; GF(p) accumulates in 64 bits with lazy reduction.
    class Accumulator {
      public:
        Accumulator(const F& f, std::size_t n) : f_(f) {
            if constexpr (std::is_same_v<F, PrimeField>)
                lazy_.assign(n, 0);
            else
                dense_.assign(n, f.zero());
        }

        Row reduce(const Row& r, const std::vector<Row>& pivot) {
            Row out;
            std::size_t n = pivot.size();
            if constexpr (std::is_same_v<F, PrimeField>) {
                const std::uint64_t p = f_.characteristic();
                for (std::size_t k = 0; k < r.cols.size(); ++k) lazy_[r.cols[k]] = r.coefs[k];
                for (std::size_t c = r.cols.front(); c < n; ++c) {
                    if (lazy_[c] == 0) continue;
                    std::uint64_t v = lazy_[c] % p;
                    lazy_[c] = 0;
                    if (v == 0) continue;
                    const Row& pr = pivot[c];
                    if (pr.cols.empty()) {
                        out.cols.push_back(static_cast<std::uint32_t>(c));
                        out.coefs.push_back(static_cast<Element>(v));
                        continue;
                    }
                    std::uint64_t factor = p - v;
                    for (std::size_t k = 1; k < pr.cols.size(); ++k) {
                        std::uint64_t& a = lazy_[pr.cols[k]];
                        a += factor * pr.coefs[k];
                        if (a >> 62) a %= p;
                    }
                }
            } else {
                for (std::size_t k = 0; k < r.cols.size(); ++k) dense_[r.cols[k]] = r.coefs[k];
                for (std::size_t c = r.cols.front(); c < n; ++c) {
                    if (f_.is_zero(dense_[c])) continue;
                    Element v = dense_[c];
                    dense_[c] = f_.zero();
                    const Row& pr = pivot[c];
                    if (pr.cols.empty()) {
                        out.cols.push_back(static_cast<std::uint32_t>(c));
                        out.coefs.push_back(v);
                        continue;
                    }
                    for (std::size_t k = 1; k < pr.cols.size(); ++k)
                        dense_[pr.cols[k]] = f_.sub(dense_[pr.cols[k]], f_.mul(v, pr.coefs[k]));
                }
            }
            return out;
        }

      private:
        const F& f_;
        std::vector<std::uint64_t> lazy_;
        std::vector<Element> dense_;
    };

    using Key = std::pair<Monomial, std::uint32_t>;

    std::uint32_t column(const Monomial& m, std::uint32_t comp) {
        auto [it, inserted] = colmap_.try_emplace(Key{m, comp}, static_cast<std::uint32_t>(cols_.size()));
        if (inserted) {
            cols_.push_back({m, comp});
            col_pivot_.push_back(-1);
        }
        return it->second;
    }

    void register_row(Source& s) {
        if (s.vec) {
            s.cols.reserve(s.vec->terms.size());
            for (const auto& t : s.vec->terms) s.cols.push_back(column(t.mon, t.comp));
        } else {
            const auto& v = elems_[s.elem].vec;
            s.cols.reserve(v.terms.size());
            for (const auto& t : v.terms) s.cols.push_back(column(s.mult * t.mon, t.comp));
        }
    }

    void preprocess() {
        for (std::size_t k = 0; k < cols_.size(); ++k) {
            if (col_pivot_[k] >= 0) continue;
            auto [m, comp] = cols_[k];
            long e = table_.find(elems_, m, comp);
            if (e < 0) continue;
            Source s{m / elems_[e].lead, static_cast<std::size_t>(e), nullptr, {}};
            col_pivot_[k] = static_cast<long>(pivots_.size());
            register_row(s);
            pivots_.push_back(std::move(s));
        }
    }

    Row to_row(const Source& s, const std::vector<std::uint32_t>& pos) const {
        Row r;
        r.cols.reserve(s.cols.size());
        r.coefs.reserve(s.cols.size());
        const Vec& v = s.vec ? *s.vec : elems_[s.elem].vec;
        for (std::size_t k = 0; k < s.cols.size(); ++k) {
            r.cols.push_back(pos[s.cols[k]]);
            r.coefs.push_back(v.terms[k].coef);
        }
        if (s.vec) {
            // explicit targets may arrive unsorted relative to the column order
            std::vector<std::size_t> idx(r.cols.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return r.cols[a] < r.cols[b]; });
            Row sorted;
            for (auto i : idx) {
                sorted.cols.push_back(r.cols[i]);
                sorted.coefs.push_back(r.coefs[i]);
            }
            return sorted;
        }
        return r;
    }

    const F& f_;
    const ModuleOrder& ord_;
    const std::vector<BasisElement<F>>& elems_;
    const ReducerTable<F>& table_;
    std::unordered_map<Key, std::uint32_t, ModuleMonomialHash> colmap_;
    std::vector<Key> cols_;
    std::vector<long> col_pivot_;
    std::vector<Source> pivots_;
    std::vector<Source> targets_;
    std::vector<std::unique_ptr<Vec>> owned_;
};

/// Degree-by-degree Gröbner engine for homogeneous input with
/// Gebauer-Möller pair pruning. S-pairs of one degree are reduced together.
template <CoefficientField F>
class GroebnerEngine {
  public:
    using Vec = ModuleVector<F>;

    GroebnerEngine(F f, int nvars, ModuleOrder ord) : f_(std::move(f)), nvars_(nvars), ord_(std::move(ord)) {
        product_criterion_ = ord_.rank() == 1;
    }

    GroebnerResult<F> run(const std::vector<Vec>& gens, const GroebnerOptions& opt) {
        GroebnerResult<F> res{f_, nvars_, ord_, {}, std::vector<char>(gens.size(), 0), false, opt.max_degree};
        std::vector<std::pair<int, std::size_t>> inputs;
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (!gens[k].is_zero()) inputs.push_back({homogeneous_degree(gens[k], ord_), k});
        std::stable_sort(inputs.begin(), inputs.end(), [](auto& a, auto& b) { return a.first < b.first; });

        std::size_t next_input = 0;
        while (true) {
            int d = std::numeric_limits<int>::max();
            for (const auto& p : pairs_) d = std::min(d, p.degree);
            if (next_input < inputs.size()) d = std::min(d, inputs[next_input].first);
            if (d == std::numeric_limits<int>::max()) break;
            if (d > opt.max_degree) {
                res.truncated = true;
                break;
            }
            Batch<F> batch(f_, ord_, elems_, table_);
            std::vector<Pair> now;
            std::erase_if(pairs_, [&](const Pair& p) {
                if (p.degree != d) return false;
                now.push_back(p);
                return true;
            });
            // deterministic order: by lcm, then indices
            std::sort(now.begin(), now.end(), [&](const Pair& a, const Pair& b) {
                int c = ord_.compare(a.lcm, a.comp, b.lcm, b.comp);
                if (c != 0) return c < 0;
                return std::pair(a.i, a.j) < std::pair(b.i, b.j);
            });
            std::unordered_set<std::pair<Monomial, std::uint32_t>, ModuleMonomialHash> seen;
            for (const auto& p : now)
                for (std::size_t e : {p.i, p.j}) {
                    Monomial mult = p.lcm / elems_[e].lead;
                    if (seen.insert({mult, static_cast<std::uint32_t>(e)}).second) batch.add_multiple(mult, e);
                }
            std::vector<std::size_t> input_ids;
            for (; next_input < inputs.size() && inputs[next_input].first == d; ++next_input) {
                input_ids.push_back(inputs[next_input].second);
                batch.add_target(gens[inputs[next_input].second]);
            }
            auto reduced = batch.reduce(true);
            std::size_t npair_rows = reduced.size() - input_ids.size();
            for (std::size_t k = 0; k < reduced.size(); ++k) {
                if (reduced[k].is_zero()) continue;
                if (k >= npair_rows) res.minimal_input[input_ids[k - npair_rows]] = 1;
                insert(std::move(reduced[k]));
            }
        }
        res.basis = reduced_basis();
        return res;
    }

  private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        std::uint32_t comp;
        int degree;
    };

    void insert(Vec v) {
        BasisElement<F> e;
        e.lead = v.lead().mon;
        e.comp = v.lead().comp;
        e.mask = e.lead.support_mask();
        e.vec = std::move(v);
        std::size_t h = elems_.size();

        // Gebauer-Möller update
        std::vector<Pair> cand;
        for (std::size_t g : active_) {
            if (elems_[g].comp != e.comp) continue;
            Monomial l = lcm(elems_[g].lead, e.lead);
            cand.push_back({g, h, l, e.comp, ord_.degree(l, e.comp)});
        }
        std::vector<char> keep(cand.size(), 0);
        for (std::size_t k = 0; k < cand.size(); ++k) {
            if (product_criterion_ && coprime(elems_[cand[k].i].lead, e.lead)) {
                keep[k] = 1;
                continue;
            }
            bool dominated = false;
            for (std::size_t l = 0; l < cand.size() && !dominated; ++l) {
                if (l == k || (l < k && !keep[l])) continue;
                if (cand[l].lcm.divides(cand[k].lcm)) dominated = true;
            }
            keep[k] = !dominated;
        }
        std::erase_if(pairs_, [&](const Pair& p) {
            if (p.comp != e.comp || !e.lead.divides(p.lcm)) return false;
            return lcm(elems_[p.i].lead, e.lead) != p.lcm && lcm(elems_[p.j].lead, e.lead) != p.lcm;
        });
        for (std::size_t k = 0; k < cand.size(); ++k) {
            if (!keep[k]) continue;
            if (product_criterion_ && coprime(elems_[cand[k].i].lead, e.lead)) continue;
            pairs_.push_back(cand[k]);
        }
        std::erase_if(active_, [&](std::size_t g) { return elems_[g].comp == e.comp && e.lead.divides(elems_[g].lead); });
        active_.push_back(h);
        table_.add(h, e);
        elems_.push_back(std::move(e));
    }

    std::vector<Vec> reduced_basis() {
        std::vector<std::size_t> act = active_;
        std::sort(act.begin(), act.end(), [&](std::size_t a, std::size_t b) {
            return ord_.compare(elems_[a].lead, elems_[a].comp, elems_[b].lead, elems_[b].comp) < 0;
        });
        ReducerTable<F> table;
        for (std::size_t g : act) table.add(g, elems_[g]);
        std::vector<Vec> out(act.size());
        std::size_t k = 0;
        while (k < act.size()) {
            int d = ord_.degree(elems_[act[k]].lead, elems_[act[k]].comp);
            std::size_t end = k;
            Batch<F> batch(f_, ord_, elems_, table);
            while (end < act.size() && ord_.degree(elems_[act[end]].lead, elems_[act[end]].comp) == d) {
                Vec tail;
                tail.terms.assign(elems_[act[end]].vec.terms.begin() + 1, elems_[act[end]].vec.terms.end());
                batch.add_target(tail);
                ++end;
            }
            auto tails = batch.reduce(false);
            for (std::size_t m = k; m < end; ++m) {
                Vec v;
                v.terms.push_back(elems_[act[m]].vec.terms.front());
                for (auto& t : tails[m - k].terms) v.terms.push_back(std::move(t));
                out[m] = std::move(v);
            }
            k = end;
        }
        return out;
    }

    F f_;
    int nvars_;
    ModuleOrder ord_;
    bool product_criterion_;
    std::vector<BasisElement<F>> elems_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    ReducerTable<F> table_;
};

template <CoefficientField F>
std::vector<BasisElement<F>> basis_elements(const std::vector<ModuleVector<F>>& basis) {
    std::vector<BasisElement<F>> out;
    out.reserve(basis.size());
    for (const auto& v : basis) {
        BasisElement<F> e;
        e.vec = v;
        e.lead = v.lead().mon;
        e.comp = v.lead().comp;
        e.mask = e.lead.support_mask();
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace detail

/// Gröbner basis of the submodule generated by homogeneous `gens`.
template <CoefficientField F>
GroebnerResult<F> module_groebner(const F& f, int nvars, const ModuleOrder& ord,
                                  const std::vector<ModuleVector<F>>& gens, const GroebnerOptions& opt = {}) {
    detail::GroebnerEngine<F> engine(f, nvars, ord);
    return engine.run(gens, opt);
}

/// Normal forms of homogeneous vectors with respect to a Gröbner basis.
template <CoefficientField F>
std::vector<ModuleVector<F>> module_normal_forms(const GroebnerResult<F>& gb, const std::vector<ModuleVector<F>>& vs) {
    auto elems = detail::basis_elements(gb.basis);
    detail::ReducerTable<F> table;
    for (std::size_t k = 0; k < elems.size(); ++k) table.add(k, elems[k]);
    // split every input into homogeneous pieces, reduce each degree in one batch
    std::vector<std::pair<int, std::size_t>> pieces_deg;
    std::vector<ModuleVector<F>> pieces;
    std::vector<std::size_t> owner;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        std::vector<std::pair<int, ModuleVector<F>>> parts;
        for (const auto& t : vs[k].terms) {
            int d = gb.order.degree(t.mon, t.comp);
            auto it = std::find_if(parts.begin(), parts.end(), [&](auto& p) { return p.first == d; });
            if (it == parts.end()) {
                parts.push_back({d, {}});
                it = parts.end() - 1;
            }
            it->second.terms.push_back(t);
        }
        for (auto& [d, v] : parts) {
            pieces_deg.push_back({d, pieces.size()});
            pieces.push_back(std::move(v));
            owner.push_back(k);
        }
    }
    std::stable_sort(pieces_deg.begin(), pieces_deg.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<ModuleVector<F>> reduced(pieces.size());
    std::size_t k = 0;
    while (k < pieces_deg.size()) {
        std::size_t end = k;
        detail::Batch<F> batch(gb.field, gb.order, elems, table);
        while (end < pieces_deg.size() && pieces_deg[end].first == pieces_deg[k].first)
            batch.add_target(pieces[pieces_deg[end++].second]);
        auto res = batch.reduce(false);
        for (std::size_t m = k; m < end; ++m) reduced[pieces_deg[m].second] = std::move(res[m - k]);
        k = end;
    }
    std::vector<std::vector<typename ModuleVector<F>::Term>> acc(vs.size());
    for (std::size_t p = 0; p < pieces.size(); ++p)
        for (auto& t : reduced[p].terms) acc[owner[p]].push_back(std::move(t));
    std::vector<ModuleVector<F>> out;
    for (auto& terms : acc) out.push_back(make_vector(gb.field, std::move(terms), gb.order));
    return out;
}

template <CoefficientField F>
ModuleVector<F> module_normal_form(const GroebnerResult<F>& gb, const ModuleVector<F>& v) {
    return module_normal_forms(gb, std::vector<ModuleVector<F>>{v}).front();
}

/// Generators of the syzygy module of homogeneous `gens` in a free module
/// with the given twists. Returned vectors live in S^{#gens} with twists
/// equal to the degrees of the generators; the set is minimal.
template <CoefficientField F>
std::vector<ModuleVector<F>> module_syzygies(const F& f, int nvars, const ModuleOrder& target,
                                             const std::vector<ModuleVector<F>>& gens,
                                             std::vector<int>* source_twists = nullptr) {
    const int r = target.rank();
    const int m = static_cast<int>(gens.size());
    std::vector<int> twists = target.twists();
    std::vector<int> blocks(r, 1);
    std::vector<int> src(m);
    for (int k = 0; k < m; ++k) {
        src[k] = gens[k].is_zero() ? 0 : homogeneous_degree(gens[k], target);
        twists.push_back(src[k]);
        blocks.push_back(0);
    }
    if (source_twists) *source_twists = src;
    ModuleOrder aug(twists, blocks);
    std::vector<ModuleVector<F>> rows;
    for (int k = 0; k < m; ++k) {
        std::vector<typename ModuleVector<F>::Term> terms = gens[k].terms;
        terms.push_back({Monomial{}, static_cast<std::uint32_t>(r + k), f.one()});
        rows.push_back(make_vector(f, std::move(terms), aug));
    }
    auto gb = module_groebner(f, nvars, aug, rows);
    ModuleOrder syz_order(src);
    std::vector<ModuleVector<F>> syz;
    for (const auto& v : gb.basis) {
        if (v.lead().comp < static_cast<std::uint32_t>(r)) continue;
        std::vector<typename ModuleVector<F>::Term> terms;
        for (const auto& t : v.terms) terms.push_back({t.mon, t.comp - r, t.coef});
        syz.push_back(make_vector(f, std::move(terms), syz_order));
    }
    // trim to a minimal generating set
    auto trimmed = module_groebner(f, nvars, syz_order, syz);
    std::vector<ModuleVector<F>> out;
    for (std::size_t k = 0; k < syz.size(); ++k)
        if (trimmed.minimal_input[k]) out.push_back(syz[k]);
    return out;
}

/// Homogeneous ideal with an immutable generator list and a lazily
/// computed, thread-safe Gröbner cache.
template <CoefficientField F>
class GradedIdeal {
  public:
    using Poly = Polynomial<F>;

    GradedIdeal() = default;
    GradedIdeal(RingPtr<F> ring, std::vector<Poly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens) {
            if (g.nvars() != ring_->nvars()) throw DimensionError("generator lives in a different ring");
            if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    int nvars() const { return ring_->nvars(); }
    const std::vector<Poly>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    /// Reduced Gröbner basis (grevlex), computed once.
    const std::vector<Poly>& groebner_basis() const {
        std::call_once(cache_->gb_once, [&] {
            auto res = compute({});
            cache_->gb_result = std::make_shared<GroebnerResult<F>>(res);
            for (const auto& v : res.basis)
                cache_->gb.push_back(polys_from_vector(field(), nvars(), v, 1).front());
        });
        return cache_->gb;
    }
    const GroebnerResult<F>& groebner_result() const {
        groebner_basis();
        return *cache_->gb_result;
    }

    /// Gröbner basis valid through degree D (not cached).
    GroebnerResult<F> truncated_groebner(int max_degree) const {
        return compute({max_degree});
    }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (const auto& g : groebner_basis()) out.push_back(g.lead_monomial());
        return out;
    }

    Poly normal_form(const Poly& f) const {
        auto v = module_normal_form(groebner_result(), to_vec(f));
        return polys_from_vector(field(), nvars(), v, 1).front();
    }
    std::vector<Poly> normal_forms(const std::vector<Poly>& fs) const {
        std::vector<ModuleVector<F>> vs;
        for (const auto& p : fs) vs.push_back(to_vec(p));
        std::vector<Poly> out;
        for (const auto& v : module_normal_forms(groebner_result(), vs))
            out.push_back(polys_from_vector(field(), nvars(), v, 1).front());
        return out;
    }
    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
    bool contains(const GradedIdeal& J) const {
        for (const auto& p : normal_forms(J.generators()))
            if (!p.is_zero()) return false;
        return true;
    }
    bool is_unit() const {
        for (const auto& g : groebner_basis())
            if (g.degree() == 0) return true;
        return false;
    }

    /// Minimal homogeneous generating set extracted from the generators.
    GradedIdeal trim() const {
        auto res = compute({});
        std::vector<Poly> kept;
        for (std::size_t k = 0; k < gens_.size(); ++k)
            if (res.minimal_input[k]) kept.push_back(gens_[k]);
        GradedIdeal out(ring_, std::move(kept));
        out.cache_->prime(res, field(), nvars());
        return out;
    }

    friend bool operator==(const GradedIdeal& a, const GradedIdeal& b) {
        return a.groebner_basis() == b.groebner_basis();
    }

  private:
    struct Cache {
        std::once_flag gb_once;
        std::vector<Poly> gb;
        std::shared_ptr<GroebnerResult<F>> gb_result;

        void prime(const GroebnerResult<F>& res, const F& f, int nvars) {
            std::call_once(gb_once, [&] {
                gb_result = std::make_shared<GroebnerResult<F>>(res);
                for (const auto& v : res.basis) gb.push_back(polys_from_vector(f, nvars, v, 1).front());
            });
        }
    };

    ModuleVector<F> to_vec(const Poly& p) const {
        std::vector<typename ModuleVector<F>::Term> terms;
        for (const auto& t : p.terms()) terms.push_back({t.mon, 0, t.coef});
        return ModuleVector<F>{std::move(terms)};
    }

    GroebnerResult<F> compute(GroebnerOptions opt) const {
        std::vector<ModuleVector<F>> vs;
        for (const auto& g : gens_) vs.push_back(to_vec(g));
        return module_groebner(field(), nvars(), ModuleOrder{}, vs, opt);
    }

    RingPtr<F> ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

template <CoefficientField F>
GradedIdeal<F> groebner_basis(const GradedIdeal<F>& I) {
    return GradedIdeal<F>(I.ring(), I.groebner_basis());
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GradedIdeal<F>& I) {
    return I.normal_form(f);
}

template <CoefficientField F>
GradedIdeal<F> ideal_sum(const GradedIdeal<F>& I, const GradedIdeal<F>& J) {
    auto g = I.generators();
    g.insert(g.end(), J.generators().begin(), J.generators().end());
    return GradedIdeal<F>(I.ring(), std::move(g));
}

template <CoefficientField F>
GradedIdeal<F> ideal_add(const GradedIdeal<F>& I, const std::vector<Polynomial<F>>& extra) {
    auto g = I.generators();
    g.insert(g.end(), extra.begin(), extra.end());
    return GradedIdeal<F>(I.ring(), std::move(g));
}

template <CoefficientField F>
GradedIdeal<F> ideal_product(const GradedIdeal<F>& I, const GradedIdeal<F>& J) {
    std::vector<Polynomial<F>> g;
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) g.push_back(a * b);
    return GradedIdeal<F>(I.ring(), std::move(g));
}

/// I^2 generated by the products g_i g_j, i <= j.
template <CoefficientField F>
GradedIdeal<F> ideal_square(const GradedIdeal<F>& I) {
    const auto& gs = I.generators();
    std::vector<Polynomial<F>> g;
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i; j < gs.size(); ++j) g.push_back(gs[i] * gs[j]);
    return GradedIdeal<F>(I.ring(), std::move(g));
}

/// Syzygy module of the generators of I (columns in S^r twisted by the
/// generator degrees), minimal.
template <CoefficientField F>
struct SyzygyMatrix {
    std::vector<int> source_twists;  // degrees of the columns
    std::vector<int> target_twists;  // degrees of the generators
    std::vector<std::vector<Polynomial<F>>> columns;
};

template <CoefficientField F>
SyzygyMatrix<F> syzygy_matrix(const GradedIdeal<F>& I) {
    const auto& gens = I.generators();
    std::vector<ModuleVector<F>> vs;
    for (const auto& g : gens) vs.push_back(vector_from_polys<F>({g}, ModuleOrder{}));
    std::vector<int> tw;
    auto syz = module_syzygies(I.field(), I.nvars(), ModuleOrder{}, vs, &tw);
    SyzygyMatrix<F> out;
    out.target_twists = tw;
    ModuleOrder ord(tw);
    for (const auto& s : syz) {
        out.source_twists.push_back(homogeneous_degree(s, ord));
        out.columns.push_back(polys_from_vector(I.field(), I.nvars(), s, static_cast<int>(gens.size())));
    }
    return out;
}

/// I : f via the first coordinates of the syzygies of (f, g_1, ..., g_r).
template <CoefficientField F>
GradedIdeal<F> ideal_quotient(const GradedIdeal<F>& I, const Polynomial<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("ideal quotient by the zero polynomial");
    if (!f.is_homogeneous()) throw std::invalid_argument("ideal quotient needs a homogeneous polynomial");
    std::vector<ModuleVector<F>> vs;
    vs.push_back(vector_from_polys<F>({f}, ModuleOrder{}));
    for (const auto& g : I.groebner_basis()) vs.push_back(vector_from_polys<F>({g}, ModuleOrder{}));
    auto syz = module_syzygies(I.field(), I.nvars(), ModuleOrder{}, vs);
    std::vector<Polynomial<F>> gens;
    for (const auto& s : syz) {
        std::vector<typename Polynomial<F>::Term> terms;
        for (const auto& t : s.terms)
            if (t.comp == 0) terms.push_back({t.mon, t.coef});
        auto p = Polynomial<F>::from_terms(I.field(), I.nvars(), std::move(terms));
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    return GradedIdeal<F>(I.ring(), std::move(gens)).trim();
}

struct CodimensionResult {
    int codim = 0;
    bool unit_ideal = false;
};

/// Minimum number of variables meeting the support of every monomial.
inline int min_hitting_set(const std::vector<std::uint32_t>& supports, int nvars) {
    int best = nvars + 1;
    std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t chosen, int size) {
        if (size >= best) return;
        const std::uint32_t* pick = nullptr;
        int pick_bits = 64;
        for (const auto& s : supports) {
            if (s & chosen) continue;
            int b = std::popcount(s);
            if (b < pick_bits) {
                pick_bits = b;
                pick = &s;
            }
        }
        if (!pick) {
            best = size;
            return;
        }
        if (size + 1 >= best) return;
        std::uint32_t s = *pick;
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            rec(chosen | (1u << v), size + 1);
        }
    };
    rec(0, 0);
    return best;
}

/// codim = #vars - dim S/I, read off the lead-term ideal.
template <CoefficientField F>
CodimensionResult codimension(const GradedIdeal<F>& I) {
    if (I.is_unit()) return {I.nvars(), true};
    std::vector<std::uint32_t> supports;
    for (const auto& m : I.leading_monomials()) supports.push_back(m.support_mask());
    // drop supports that contain another one
    std::sort(supports.begin(), supports.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::uint32_t> minimal;
    for (auto s : supports) {
        bool redundant = false;
        for (auto t : minimal)
            if ((t & s) == t) redundant = true;
        if (!redundant) minimal.push_back(s);
    }
    return {min_hitting_set(minimal, I.nvars()), false};
}

}  // namespace gor
