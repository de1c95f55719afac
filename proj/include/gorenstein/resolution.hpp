#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "hilbert.hpp"
#include "matrix.hpp"

namespace gor {

/// Graded Betti numbers b_{i,j} = dim Tor_i(M, k)_j.
class BettiTable {
  public:
    BettiTable() = default;
    explicit BettiTable(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    void set_nvars(int n) { nvars_ = n; }

    long long get(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }
    void set(int i, int j, long long b) {
        if (b < 0) throw std::invalid_argument("negative Betti number");
        if (b == 0)
            entries_.erase({i, j});
        else
            entries_[{i, j}] = b;
    }
    void add(int i, int j, long long b) { set(i, j, get(i, j) + b); }

    /// Nonzero entries keyed by (i, j).
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    bool truncated() const { return truncated_; }
    void set_truncated(bool t) { truncated_ = t; }

    /// max{ j - i : b_{i,j} != 0 }
    int regularity() const {
        int r = std::numeric_limits<int>::min();
        for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
        return entries_.empty() ? 0 : r;
    }
    int pdim() const {
        int p = 0;
        for (const auto& [k, v] : entries_) p = std::max(p, k.first);
        return p;
    }
    int min_row() const {
        int r = std::numeric_limits<int>::max();
        for (const auto& [k, v] : entries_) r = std::min(r, k.second - k.first);
        return entries_.empty() ? 0 : r;
    }
    int min_column() const {
        int c = std::numeric_limits<int>::max();
        for (const auto& [k, v] : entries_) c = std::min(c, k.first);
        return entries_.empty() ? 0 : c;
    }
    std::vector<long long> totals() const {
        std::vector<long long> t(entries_.empty() ? 0 : pdim() + 1, 0);
        for (const auto& [k, v] : entries_) t[k.first] += v;
        return t;
    }
    /// Row r of the display grid: entries b_{i, i+r}.
    std::vector<long long> row(int r) const {
        std::vector<long long> out(pdim() + 1, 0);
        for (int i = 0; i <= pdim(); ++i) out[i] = get(i, i + r);
        return out;
    }

    /// sum (-1)^i b_{i,j} t^j; for S/I this is the Hilbert series numerator.
    IntPoly numerator() const {
        IntPoly p;
        for (const auto& [k, v] : entries_) {
            if (k.second < 0) throw std::domain_error("numerator needs nonnegative degrees");
            if (static_cast<int>(p.size()) <= k.second) p.resize(k.second + 1, 0);
            p[k.second] += (k.first % 2 ? -v : v);
        }
        detail::trim_intpoly(p);
        return p;
    }

    BettiTable shifted(int di, int dj) const {
        BettiTable t(nvars_);
        for (const auto& [k, v] : entries_) t.set(k.first + di, k.second + dj, v);
        t.truncated_ = truncated_;
        return t;
    }

    /// Entrywise comparison: every entry of *this is <= the other's.
    bool dominated_by(const BettiTable& o) const {
        for (const auto& [k, v] : entries_)
            if (v > o.get(k.first, k.second)) return false;
        return true;
    }

    friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

  private:
    int nvars_ = 0;
    bool truncated_ = false;
    std::map<std::pair<int, int>, long long> entries_;
};

struct TableStats {
    int regularity = 0;
    int pdim = 0;
    int codim_if_cm = 0;
    bool is_gorenstein = false;
    int canonical_shift = 0;
};

/// Statistics of a complete Betti table of a cyclic module S/I.
inline TableStats table_stats(const BettiTable& T) {
    if (T.truncated()) throw std::domain_error("table_stats needs a complete Betti table");
    TableStats s;
    s.regularity = T.regularity();
    s.pdim = T.pdim();
    s.codim_if_cm = s.pdim;
    auto tot = T.totals();
    s.is_gorenstein = !tot.empty() && tot.back() == 1;
    s.canonical_shift = -T.nvars() + s.regularity + s.codim_if_cm;
    return s;
}

/// True if b_{i,j} = b_{c-i, c+r-j} for all entries.
inline bool has_gorenstein_duality(const BettiTable& T, int codim, int reg) {
    for (const auto& [k, v] : T.entries())
        if (T.get(codim - k.first, codim + reg - k.second) != v) return false;
    return true;
}

/// Finitely presented graded module coker(F_1 -> F_0), F_0 = sum S(-twist_c).
template <CoefficientField F>
class CokernelModule {
  public:
    using Vec = ModuleVector<F>;
    using BasisElt = std::pair<Monomial, std::uint32_t>;

    CokernelModule(RingPtr<F> ring, std::vector<int> twists, std::vector<Vec> relations)
        : ring_(std::move(ring)), order_(std::move(twists)), relations_(std::move(relations)),
          cache_(std::make_shared<Cache>()) {
        for (auto& r : relations_) r = make_vector(ring_->field(), r.terms, order_);
        std::erase_if(relations_, [](const Vec& v) { return v.is_zero(); });
        for (const auto& r : relations_) homogeneous_degree(r, order_);
    }

    /// S/I as a cyclic module.
    static CokernelModule quotient_ring(const GradedIdeal<F>& I) {
        std::vector<Vec> rel;
        for (const auto& g : I.generators()) rel.push_back(vector_from_polys<F>({g}, ModuleOrder{}));
        return CokernelModule(I.ring(), {0}, std::move(rel));
    }

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    int nvars() const { return ring_->nvars(); }
    int rank() const { return order_.rank(); }
    const ModuleOrder& order() const { return order_; }
    const std::vector<int>& twists() const { return order_.twists(); }
    const std::vector<Vec>& relations() const { return relations_; }

    const GroebnerResult<F>& groebner() const {
        std::call_once(cache_->once, [&] {
            cache_->gb = module_groebner(field(), nvars(), order_, relations_);
            for (const auto& v : cache_->gb.basis) cache_->leads.push_back({v.lead().mon, v.lead().comp});
        });
        return cache_->gb;
    }

    /// Standard monomials of total degree d, in decreasing module order.
    std::vector<BasisElt> basis(int d) const {
        groebner();
        std::vector<BasisElt> out;
        for (int c = 0; c < rank(); ++c) {
            int e = d - order_.twist(c);
            if (e < 0) continue;
            for (const auto& m : monomials_of_degree(nvars(), e)) {
                bool reducible = false;
                for (const auto& [l, lc] : cache_->leads)
                    if (lc == static_cast<std::uint32_t>(c) && l.divides(m)) {
                        reducible = true;
                        break;
                    }
                if (!reducible) out.push_back({m, static_cast<std::uint32_t>(c)});
            }
        }
        std::sort(out.begin(), out.end(), [&](const BasisElt& a, const BasisElt& b) {
            return order_.compare(a.first, a.second, b.first, b.second) > 0;
        });
        return out;
    }

    long long dimension(int d) const { return static_cast<long long>(basis(d).size()); }

    HilbertData hilbert(int t_max) const {
        int shift = 0;
        for (int t : twists()) shift = std::min(shift, t);
        if (shift < 0) throw std::invalid_argument("hilbert data needs nonnegative twists");
        return hilbert_from_numerator(module_hilbert_numerator(groebner()), nvars(), t_max);
    }

    bool finite_length() const { return hilbert(0).dimension == 0; }

    /// Largest degree with a nonzero piece (finite length only).
    int top_degree() const {
        auto h = hilbert(0);
        if (h.dimension != 0) throw std::domain_error("module does not have finite length");
        return static_cast<int>(h.reduced_numerator.size()) - 1;
    }
    int min_generator_degree() const {
        int d = std::numeric_limits<int>::max();
        for (int t : twists()) d = std::min(d, t);
        return twists().empty() ? 0 : d;
    }

    /// Matrix of multiplication by each variable M_d -> M_{d+1}: result[k][col]
    /// lists (row index, coefficient) in the degree d+1 basis.
    std::vector<std::vector<std::vector<std::pair<std::size_t, typename F::Element>>>> multiplication_maps(
        const std::vector<BasisElt>& src, const std::vector<BasisElt>& dst) const {
        const F& f = field();
        std::unordered_map<BasisElt, std::size_t, ModuleMonomialHash> index;
        for (std::size_t r = 0; r < dst.size(); ++r) index[dst[r]] = r;
        std::vector<Vec> products;
        for (int k = 0; k < nvars(); ++k)
            for (const auto& [m, c] : src) products.push_back(Vec{{{m * Monomial::variable(k), c, f.one()}}});
        auto nfs = module_normal_forms(groebner(), products);
        std::vector<std::vector<std::vector<std::pair<std::size_t, typename F::Element>>>> out(nvars());
        std::size_t p = 0;
        for (int k = 0; k < nvars(); ++k) {
            out[k].resize(src.size());
            for (std::size_t col = 0; col < src.size(); ++col, ++p)
                for (const auto& t : nfs[p].terms) out[k][col].push_back({index.at({t.mon, t.comp}), t.coef});
        }
        return out;
    }

  private:
    struct Cache {
        std::once_flag once;
        GroebnerResult<F> gb;
        std::vector<BasisElt> leads;
    };
    RingPtr<F> ring_;
    ModuleOrder order_;
    std::vector<Vec> relations_;
    std::shared_ptr<Cache> cache_;
};

/// Betti numbers as Koszul homology of M: b_{i,j} = dim H_i(K(x) (x) M)_j,
/// for i <= i_max and j <= j_max. Flagged truncated unless the caps cover
/// every possibly nonzero entry (finite-length modules only).
template <CoefficientField F>
BettiTable betti_via_koszul(const CokernelModule<F>& M, int i_max, int j_max) {
    const int n = M.nvars();
    const F& f = M.field();
    i_max = std::min(i_max, n);
    BettiTable T(n);
    const int dmin = M.min_generator_degree();
    bool finite = M.finite_length();
    int dtop = finite ? M.top_degree() : j_max;
    T.set_truncated(!finite || i_max < n || j_max < dtop + n);
    if (M.rank() == 0) return T;

    // graded pieces and multiplication maps
    int dlast = std::min(dtop, j_max);
    std::map<int, std::vector<typename CokernelModule<F>::BasisElt>> piece;
    for (int d = dmin; d <= dlast + 1; ++d) piece[d] = M.basis(d);
    std::map<int, decltype(M.multiplication_maps(piece[dmin], piece[dmin]))> mult;
    for (int d = dmin; d <= dlast; ++d) mult[d] = M.multiplication_maps(piece[d], piece[d + 1]);

    // subsets of variables by size
    std::vector<std::vector<std::uint32_t>> subsets(n + 1);
    for (std::uint32_t s = 0; s < (1u << n); ++s) subsets[std::popcount(s)].push_back(s);
    std::vector<std::unordered_map<std::uint32_t, std::size_t>> subset_index(n + 1);
    for (int i = 0; i <= n; ++i)
        for (std::size_t k = 0; k < subsets[i].size(); ++k) subset_index[i][subsets[i][k]] = k;

    auto dim_piece = [&](int d) -> std::size_t {
        auto it = piece.find(d);
        return it == piece.end() ? 0 : it->second.size();
    };
    // rank of d_i : (K_i)_j -> (K_{i-1})_j
    auto koszul_rank = [&](int i, int j) -> std::size_t {
        if (i <= 0 || i > n) return 0;
        int d = j - i;  // source module degree
        std::size_t ms = dim_piece(d), mt = dim_piece(d + 1);
        if (ms == 0 || mt == 0) return 0;
        ExactMatrix<F> A(f, subsets[i].size() * ms, subsets[i - 1].size() * mt);
        for (std::size_t si = 0; si < subsets[i].size(); ++si) {
            std::uint32_t S = subsets[i][si];
            int pos = 0;
            for (int k = 0; k < n; ++k) {
                if (!(S >> k & 1)) continue;
                auto sign_neg = pos++ % 2 == 1;
                std::size_t ti = subset_index[i - 1].at(S & ~(1u << k));
                const auto& mk = mult.at(d)[k];
                for (std::size_t b = 0; b < ms; ++b)
                    for (const auto& [r, c] : mk[b])
                        A.add(si * ms + b, ti * mt + r, sign_neg ? f.neg(c) : c);
            }
        }
        return A.rank();
    };

    for (int i = 0; i <= i_max; ++i)
        for (int j = dmin + i; j <= std::min(j_max, dlast + i); ++j) {
            std::size_t dim = subsets[i].size() * dim_piece(j - i);
            if (dim == 0) continue;
            long long b = static_cast<long long>(dim) - static_cast<long long>(koszul_rank(i, j)) -
                          static_cast<long long>(koszul_rank(i + 1, j));
            if (b) T.set(i, j, b);
        }
    return T;
}

template <CoefficientField F>
BettiTable betti_via_koszul(const GradedIdeal<F>& I, int i_max, int j_max) {
    return betti_via_koszul(CokernelModule<F>::quotient_ring(I), i_max, j_max);
}

/// Minimal graded free resolution 0 <- F_0 <- F_1 <- ... <- F_p.
template <CoefficientField F>
struct FreeResolution {
    RingPtr<F> ring;
    std::vector<std::vector<int>> twists;              // twists[k]: degrees of the generators of F_k
    std::vector<std::vector<ModuleVector<F>>> maps;    // maps[k]: columns of d_{k+1} as vectors in F_k

    int length() const { return static_cast<int>(twists.size()) - 1; }

    BettiTable betti() const {
        BettiTable T(ring->nvars());
        for (std::size_t k = 0; k < twists.size(); ++k)
            for (int t : twists[k]) T.add(static_cast<int>(k), t, 1);
        return T;
    }

    /// d_k o d_{k+1} == 0 for every consecutive pair.
    bool is_complex() const {
        const F& f = ring->field();
        for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
            ModuleOrder ord(twists[k]);
            for (const auto& col : maps[k + 1]) {
                auto coeffs = polys_from_vector(f, ring->nvars(), col, static_cast<int>(twists[k + 1].size()));
                if (!linear_combination(f, coeffs, maps[k], ord).is_zero()) return false;
            }
        }
        return true;
    }

    /// No entry of any differential is a nonzero constant.
    bool is_minimal() const {
        for (const auto& m : maps)
            for (const auto& col : m)
                for (const auto& t : col.terms)
                    if (t.mon.is_one()) return false;
        return true;
    }
};

/// Removes generators that are killed by a relation with a unit entry.
template <CoefficientField F>
CokernelModule<F> prune(const CokernelModule<F>& M) {
    const F& f = M.field();
    std::vector<int> twists = M.twists();
    std::vector<ModuleVector<F>> rels = M.relations();
    std::vector<char> alive(twists.size(), 1);
    ModuleOrder ord(twists);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < rels.size() && !changed; ++r) {
            for (const auto& t : rels[r].terms) {
                if (!t.mon.is_one()) continue;
                // e_c = -(1/u) * (rest of relation): substitute into the others
                std::uint32_t c = t.comp;
                auto inv = f.inv(t.coef);
                ModuleVector<F> piv = rels[r];
                for (std::size_t s = 0; s < rels.size(); ++s) {
                    if (s == r) continue;
                    std::vector<typename ModuleVector<F>::Term> coeffs;
                    for (const auto& u : rels[s].terms)
                        if (u.comp == c) coeffs.push_back({u.mon, 0, u.coef});
                    if (coeffs.empty()) continue;
                    // rels[s] -= (coeff_c / unit) * piv
                    std::vector<typename ModuleVector<F>::Term> terms = rels[s].terms;
                    for (const auto& a : coeffs)
                        for (const auto& b : piv.terms)
                            terms.push_back({a.mon * b.mon, b.comp, f.neg(f.mul(f.mul(a.coef, inv), b.coef))});
                    rels[s] = make_vector(f, std::move(terms), ord);
                }
                rels.erase(rels.begin() + r);
                alive[c] = 0;
                changed = true;
                break;
            }
        }
    }
    std::vector<int> new_index(twists.size(), -1), new_twists;
    for (std::size_t c = 0; c < twists.size(); ++c)
        if (alive[c]) {
            new_index[c] = static_cast<int>(new_twists.size());
            new_twists.push_back(twists[c]);
        }
    ModuleOrder nord(new_twists);
    std::vector<ModuleVector<F>> out;
    for (const auto& r : rels) {
        std::vector<typename ModuleVector<F>::Term> terms;
        for (const auto& t : r.terms) {
            if (new_index[t.comp] < 0) throw std::logic_error("prune left a dead component");
            terms.push_back({t.mon, static_cast<std::uint32_t>(new_index[t.comp]), t.coef});
        }
        auto v = make_vector(f, std::move(terms), nord);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return CokernelModule<F>(M.ring(), new_twists, std::move(out));
}

template <CoefficientField F>
FreeResolution<F> minimal_resolution(const CokernelModule<F>& M);

template <CoefficientField F>
FreeResolution<F> minimal_resolution(const GradedIdeal<F>& I) {
    return minimal_resolution(CokernelModule<F>::quotient_ring(I));
}

namespace detail {

/// One level of a Schreyer frame. Basis element e_i of F_k is tagged with the
/// level-0 term (mon0[i], comp0[i]) that its image's lead term induces, so
/// comparing terms of F_k reduces to the order on F_0 and then the index.
template <CoefficientField F>
struct SchreyerLevel {
    struct Term {
        Monomial mon;
        std::uint32_t comp;
        typename F::Element coef;
        Monomial key;  // mon * mon0 of the previous level
    };
    using Vec = std::vector<Term>;
    std::vector<Monomial> mon0;
    std::vector<std::uint32_t> comp0;
    std::vector<int> deg;
    std::vector<Vec> img;  // d(e_i) in the previous level
};

inline bool lex_less(const Monomial& a, const Monomial& b, int nvars) {
    for (int v = 0; v < nvars; ++v)
        if (a[v] != b[v]) return a[v] < b[v];
    return false;
}

/// Slot table for the terms (m, c) of one graded piece of a free module,
/// addressed by the combinatorial rank of m. Disabled when the piece is
/// larger than `cap`.
class DegreePieceIndex {
  public:
    static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

    DegreePieceIndex(int nvars, const std::vector<int>& comp_deg, int degree, std::size_t cap) : n_(nvars) {
        int top = 0;
        for (int d : comp_deg) top = std::max(top, degree - d);
        binom_.assign(n_, std::vector<std::size_t>(top + n_ + 1, 0));
        for (int k = 0; k < n_; ++k)
            for (int p = 0; p <= top + n_; ++p) binom_[k][p] = static_cast<std::size_t>(binomial(p, k));
        std::size_t total = 0;
        for (int d : comp_deg) {
            offset_.push_back(total);
            int e = degree - d;
            if (e >= 0) total += binom_[n_ - 1][e + n_ - 1];
            if (total > cap) return;
        }
        slots_.assign(total, kEmpty);
        enabled_ = true;
    }
    bool enabled() const { return enabled_; }
    std::uint32_t& slot(const Monomial& m, std::uint32_t comp) {
        std::size_t r = 0, s = 0;
        for (int k = 1; k < n_; ++k) {
            s += static_cast<std::size_t>(m[k - 1]);
            r += binom_[k][s + k - 1];
        }
        return slots_[offset_[comp] + r];
    }

  private:
    int n_;
    bool enabled_ = false;
    std::vector<std::vector<std::size_t>> binom_;
    std::vector<std::size_t> offset_;
    std::vector<std::uint32_t> slots_;
};

/// Sparse accumulator for the terms of one graded piece of a free module.
template <CoefficientField F>
class PieceAccumulator {
  public:
    using Term = typename ModuleVector<F>::Term;

    PieceAccumulator(const F& f, int nvars, const std::vector<int>& comp_deg, int degree)
        : f_(f), index_(nvars, comp_deg, degree, std::size_t(1) << 24) {}

    void add(const Monomial& m, std::uint32_t comp, const typename F::Element& c) {
        std::uint32_t* id;
        if (index_.enabled()) {
            id = &index_.slot(m, comp);
        } else {
            id = &map_.try_emplace({m, comp}, DegreePieceIndex::kEmpty).first->second;
        }
        if (*id == DegreePieceIndex::kEmpty || *id >= terms_.size() || terms_[*id].mon != m || terms_[*id].comp != comp) {
            *id = static_cast<std::uint32_t>(terms_.size());
            terms_.push_back({m, comp, c});
            return;
        }
        terms_[*id].coef = f_.add(terms_[*id].coef, c);
    }
    std::vector<Term>& terms() { return terms_; }

    /// Takes the collected terms and resets for the next vector.
    std::vector<Term> take() {
        for (const auto& t : terms_) {
            if (index_.enabled())
                index_.slot(t.mon, t.comp) = DegreePieceIndex::kEmpty;
        }
        map_.clear();
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_)
            if (!f_.is_zero(t.coef)) out.push_back(t);
        terms_.clear();
        return out;
    }

  private:
    const F& f_;
    DegreePieceIndex index_;
    std::unordered_map<std::pair<Monomial, std::uint32_t>, std::uint32_t, ModuleMonomialHash> map_;
    std::vector<Term> terms_;
};

}  // namespace detail

/// A free resolution that is usually not minimal, computed by Schreyer's
/// method: a Gröbner basis of the relations gives F_1, and every later
/// level comes from reducing the S-pairs of the previous one, which are
/// automatically a Gröbner basis for the induced order. Elements sharing a
/// lead component are sorted lexicographically by lead monomial, so the
/// frame stops after at most nvars steps.
template <CoefficientField F>
FreeResolution<F> schreyer_resolution(const CokernelModule<F>& M) {
    using Level = detail::SchreyerLevel<F>;
    using Term = typename Level::Term;
    using Vec = typename Level::Vec;
    const F& f = M.field();
    const int n = M.nvars();
    const ModuleOrder& ord0 = M.order();

    std::vector<Level> levels(1);
    for (int c = 0; c < M.rank(); ++c) {
        levels[0].mon0.push_back(Monomial{});
        levels[0].comp0.push_back(static_cast<std::uint32_t>(c));
        levels[0].deg.push_back(M.twists()[c]);
    }

    // level 1: a Gröbner basis of the relations, grouped by lead component
    {
        const auto& gb = M.groebner();
        std::vector<std::size_t> idx(gb.basis.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            const auto &la = gb.basis[a].lead(), &lb = gb.basis[b].lead();
            if (la.comp != lb.comp) return la.comp < lb.comp;
            return detail::lex_less(la.mon, lb.mon, n);
        });
        Level L;
        for (std::size_t k : idx) {
            const auto& v = gb.basis[k];
            Vec img;
            img.reserve(v.terms.size());
            for (const auto& t : v.terms) img.push_back({t.mon, t.comp, t.coef, t.mon});
            L.mon0.push_back(v.lead().mon);
            L.comp0.push_back(v.lead().comp);
            L.deg.push_back(homogeneous_degree(v, ord0));
            L.img.push_back(std::move(img));
        }
        if (!L.img.empty()) levels.push_back(std::move(L));
    }

    while (levels.size() > 1) {
        const Level& cur = levels.back();
        const Level& prev = levels[levels.size() - 2];
        // order on the terms of prev
        auto cmp = [&](const Term& a, const Term& b) {
            int c = ord0.compare(a.key, prev.comp0[a.comp], b.key, prev.comp0[b.comp]);
            if (c != 0) return c;
            if (a.comp != b.comp) return a.comp > b.comp ? 1 : -1;
            return 0;
        };

        const std::size_t m = cur.img.size();
        std::vector<std::vector<std::size_t>> bucket(prev.deg.size());
        std::vector<typename F::Element> lead_inv(m);
        for (std::size_t i = 0; i < m; ++i) {
            bucket[cur.img[i].front().comp].push_back(i);
            lead_inv[i] = f.inv(cur.img[i].front().coef);
        }

        // the frame: for each i, minimal generators q of (lead_j : lead_i) over
        // earlier j with the same component; the new element has lead q e_i
        struct Pair {
            std::size_t i, j;
            Monomial q;
            int deg;
        };
        std::vector<Pair> frame;
        for (std::size_t i = 0; i < m; ++i) {
            const Term& li = cur.img[i].front();
            std::vector<std::pair<Monomial, std::size_t>> quo;
            for (std::size_t j : bucket[li.comp]) {
                if (j >= i) break;
                quo.push_back({lcm(li.mon, cur.img[j].front().mon) / li.mon, j});
            }
            std::vector<std::pair<Monomial, std::size_t>> mins;
            for (std::size_t a = 0; a < quo.size(); ++a) {
                bool keep = true;
                for (std::size_t b = 0; b < quo.size() && keep; ++b) {
                    if (a == b || !quo[b].first.divides(quo[a].first)) continue;
                    if (quo[b].first != quo[a].first || b < a) keep = false;
                }
                if (keep) mins.push_back(quo[a]);
            }
            std::sort(mins.begin(), mins.end(),
                      [&](const auto& a, const auto& b) { return detail::lex_less(a.first, b.first, n); });
            for (const auto& [q, j] : mins) frame.push_back({i, j, q, cur.deg[i] + q.degree()});
        }
        if (frame.empty()) break;
        if (static_cast<int>(levels.size()) > n) throw std::logic_error("Schreyer frame longer than the number of variables");

        Level next;
        next.img.resize(frame.size());
        for (const auto& p : frame) {
            next.mon0.push_back(p.q * cur.mon0[p.i]);
            next.comp0.push_back(cur.comp0[p.i]);
            next.deg.push_back(p.deg);
        }
        std::map<int, std::vector<std::size_t>> by_degree;
        for (std::size_t k = 0; k < frame.size(); ++k) by_degree[frame[k].deg].push_back(k);

        for (const auto& [deg, members] : by_degree) {
            // symbolic preprocessing: every term of prev in this degree that the
            // reductions can reach, each with its reducer
            std::unordered_map<std::pair<Monomial, std::uint32_t>, std::uint32_t, ModuleMonomialHash> colmap;
            detail::DegreePieceIndex dense_index(n, prev.deg, deg, std::size_t(1) << 24);
            std::vector<Term> cols;
            std::vector<std::pair<std::size_t, Monomial>> reducer;  // (element, multiplier) or (m, _)
            std::size_t scanned = 0;
            auto column = [&](const Monomial& mon, std::uint32_t comp, const Monomial& key) {
                if (dense_index.enabled()) {
                    std::uint32_t& id = dense_index.slot(mon, comp);
                    if (id == detail::DegreePieceIndex::kEmpty) {
                        id = static_cast<std::uint32_t>(cols.size());
                        cols.push_back({mon, comp, f.zero(), key});
                    }
                    return id;
                }
                auto [it, fresh] = colmap.try_emplace({mon, comp}, static_cast<std::uint32_t>(cols.size()));
                if (fresh) cols.push_back({mon, comp, f.zero(), key});
                return it->second;
            };
            for (std::size_t k : members) {
                const auto& p = frame[k];
                const Monomial qj = lcm(p.q * cur.img[p.i].front().mon, cur.img[p.j].front().mon) /
                                    cur.img[p.j].front().mon;
                for (const auto& t : cur.img[p.i]) column(p.q * t.mon, t.comp, p.q * t.key);
                for (const auto& t : cur.img[p.j]) column(qj * t.mon, t.comp, qj * t.key);
            }
            while (scanned < cols.size()) {
                const Term c = cols[scanned++];
                std::size_t red = m;
                for (std::size_t l : bucket[c.comp])
                    if (cur.img[l].front().mon.divides(c.mon)) {
                        red = l;
                        break;
                    }
                Monomial g;
                if (red != m) {
                    g = c.mon / cur.img[red].front().mon;
                    for (const auto& t : cur.img[red]) column(g * t.mon, t.comp, g * t.key);
                }
                reducer.push_back({red, g});
            }
            const std::size_t ncols = cols.size();
            std::vector<std::uint32_t> perm(ncols), pos(ncols);
            for (std::uint32_t k = 0; k < ncols; ++k) perm[k] = k;
            std::sort(perm.begin(), perm.end(),
                      [&](std::uint32_t a, std::uint32_t b) { return cmp(cols[a], cols[b]) > 0; });
            for (std::uint32_t k = 0; k < ncols; ++k) pos[perm[k]] = k;

            // reducer rows with unit leads, indexed by sorted position
            struct Row {
                std::vector<std::uint32_t> cols;
                std::vector<typename F::Element> coefs;
            };
            auto make_row = [&](std::size_t l, const Monomial& g, const typename F::Element& s) {
                Row r;
                r.cols.reserve(cur.img[l].size());
                r.coefs.reserve(cur.img[l].size());
                for (const auto& t : cur.img[l]) {
                    r.cols.push_back(pos[column(g * t.mon, t.comp, Monomial{})]);
                    r.coefs.push_back(f.mul(s, t.coef));
                }
                return r;
            };
            std::vector<Row> rows(ncols);
            for (std::uint32_t k = 0; k < ncols; ++k)
                if (reducer[k].first != m) rows[pos[k]] = make_row(reducer[k].first, reducer[k].second, lead_inv[reducer[k].first]);

            std::vector<std::uint64_t> lazy;
            std::vector<typename F::Element> dense;
            if constexpr (std::is_same_v<F, PrimeField>)
                lazy.assign(ncols, 0);
            else
                dense.assign(ncols, f.zero());
            for (std::size_t k : members) {
                const auto& p = frame[k];
                const Monomial qj = lcm(p.q * cur.img[p.i].front().mon, cur.img[p.j].front().mon) /
                                    cur.img[p.j].front().mon;
                Vec sigma;
                sigma.push_back({p.q, static_cast<std::uint32_t>(p.i), lead_inv[p.i], p.q * cur.mon0[p.i]});
                sigma.push_back({qj, static_cast<std::uint32_t>(p.j), f.neg(lead_inv[p.j]), qj * cur.mon0[p.j]});
                Row a = make_row(p.i, p.q, lead_inv[p.i]);
                Row b = make_row(p.j, qj, f.neg(lead_inv[p.j]));
                const std::uint32_t start = a.cols.front();
                auto emit = [&](std::uint32_t c, const typename F::Element& v) {
                    std::uint32_t col = perm[c];
                    const auto& [l, g] = reducer[col];
                    if (l == m) throw std::logic_error("Schreyer reduction found an irreducible term");
                    sigma.push_back({g, static_cast<std::uint32_t>(l), f.neg(f.mul(v, lead_inv[l])), g * cur.mon0[l]});
                };
                if constexpr (std::is_same_v<F, PrimeField>) {
                    const std::uint64_t pr = f.characteristic();
                    for (std::size_t t = 0; t < a.cols.size(); ++t) lazy[a.cols[t]] += a.coefs[t];
                    for (std::size_t t = 0; t < b.cols.size(); ++t) lazy[b.cols[t]] += b.coefs[t];
                    for (std::size_t c = start; c < ncols; ++c) {
                        if (lazy[c] == 0) continue;
                        std::uint64_t v = lazy[c] % pr;
                        lazy[c] = 0;
                        if (v == 0 || c == start) continue;
                        emit(static_cast<std::uint32_t>(c), static_cast<typename F::Element>(v));
                        const Row& r = rows[c];
                        const std::uint64_t factor = pr - v;
                        for (std::size_t t = 1; t < r.cols.size(); ++t) {
                            std::uint64_t& x = lazy[r.cols[t]];
                            x += factor * r.coefs[t];
                            if (x >> 62) x %= pr;
                        }
                    }
                } else {
                    for (std::size_t t = 0; t < a.cols.size(); ++t) dense[a.cols[t]] = f.add(dense[a.cols[t]], a.coefs[t]);
                    for (std::size_t t = 0; t < b.cols.size(); ++t) dense[b.cols[t]] = f.add(dense[b.cols[t]], b.coefs[t]);
                    for (std::size_t c = start; c < ncols; ++c) {
                        if (f.is_zero(dense[c])) continue;
                        auto v = dense[c];
                        dense[c] = f.zero();
                        if (c == start) continue;
                        emit(static_cast<std::uint32_t>(c), v);
                        const Row& r = rows[c];
                        for (std::size_t t = 1; t < r.cols.size(); ++t)
                            dense[r.cols[t]] = f.sub(dense[r.cols[t]], f.mul(v, r.coefs[t]));
                    }
                }
                next.img[k] = std::move(sigma);
            }
        }
        levels.push_back(std::move(next));
    }

    FreeResolution<F> res;
    res.ring = M.ring();
    for (std::size_t k = 0; k < levels.size(); ++k) {
        res.twists.push_back(levels[k].deg);
        if (k == 0) continue;
        ModuleOrder target(levels[k - 1].deg);
        std::vector<ModuleVector<F>> cols;
        for (const auto& v : levels[k].img) {
            std::vector<typename ModuleVector<F>::Term> terms;
            terms.reserve(v.size());
            for (const auto& t : v) terms.push_back({t.mon, t.comp, t.coef});
            cols.push_back(make_vector(f, std::move(terms), target));
        }
        res.maps.push_back(std::move(cols));
    }
    return res;
}

/// Splits off trivial summands S(-a) -> S(-a) until no differential has a
/// nonzero constant entry. For each degree a, a maximal invertible block U
/// of the constant part of d_k is removed by a Schur complement; d_{k-1}
/// loses the matching columns and d_{k+1} the matching rows.
template <CoefficientField F>
FreeResolution<F> minimize(FreeResolution<F> R) {
    using Term = typename ModuleVector<F>::Term;
    using Element = typename F::Element;
    const F& f = R.ring->field();
    for (std::size_t k = 1; k < R.twists.size(); ++k) {
        auto& cols = R.maps[k - 1];
        const std::size_t nt = R.twists[k - 1].size();
        std::vector<char> dead_col(cols.size(), 0), dead_row(nt, 0);
        // per column: pivot index inside its block, or -1
        std::vector<int> block_of_row(nt, -1), slot_of_row(nt, -1);
        struct Block {
            std::vector<std::uint32_t> rows;  // pivot rows g
            std::vector<std::size_t> cols;    // pivot columns h
            std::vector<Element> inv;         // U^{-1}, cols x rows
        };
        std::vector<Block> blocks;
        std::map<int, std::vector<std::size_t>> by_degree;
        for (std::size_t h = 0; h < cols.size(); ++h) by_degree[R.twists[k][h]].push_back(h);
        for (const auto& [a, hs] : by_degree) {
            std::vector<std::uint32_t> gs;
            std::unordered_map<std::uint32_t, std::size_t> gpos;
            for (std::size_t h : hs)
                for (const auto& t : cols[h].terms)
                    if (t.mon.is_one() && gpos.try_emplace(t.comp, gs.size()).second) gs.push_back(t.comp);
            if (gs.empty()) continue;
            const std::size_t nr = gs.size(), nc = hs.size();
            std::vector<Element> U(nr * nc, f.zero());
            for (std::size_t c = 0; c < nc; ++c)
                for (const auto& t : cols[hs[c]].terms)
                    if (t.mon.is_one()) U[gpos.at(t.comp) * nc + c] = t.coef;
            // pivots by elimination on a copy
            std::vector<Element> W = U;
            std::vector<char> row_used(nr, 0);
            Block B;
            std::vector<std::size_t> prow, pcol;
            for (std::size_t c = 0; c < nc; ++c) {
                std::size_t r = nr;
                for (std::size_t i = 0; i < nr; ++i)
                    if (!row_used[i] && !f.is_zero(W[i * nc + c])) {
                        r = i;
                        break;
                    }
                if (r == nr) continue;
                row_used[r] = 1;
                prow.push_back(r);
                pcol.push_back(c);
                const Element inv = f.inv(W[r * nc + c]);
                for (std::size_t i = 0; i < nr; ++i) {
                    if (i == r || f.is_zero(W[i * nc + c])) continue;
                    const Element s = f.mul(W[i * nc + c], inv);
                    for (std::size_t j = c; j < nc; ++j) W[i * nc + j] = f.sub(W[i * nc + j], f.mul(s, W[r * nc + j]));
                }
            }
            const std::size_t r = prow.size();
            // invert U restricted to the pivot rows and columns (Gauss-Jordan on [U_P | I])
            std::vector<Element> A(r * 2 * r, f.zero());
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j) A[i * 2 * r + j] = U[prow[i] * nc + pcol[j]];
                A[i * 2 * r + r + i] = f.one();
            }
            for (std::size_t c = 0; c < r; ++c) {
                std::size_t p = c;
                while (f.is_zero(A[p * 2 * r + c])) ++p;
                if (p != c)
                    for (std::size_t j = 0; j < 2 * r; ++j) std::swap(A[p * 2 * r + j], A[c * 2 * r + j]);
                const Element inv = f.inv(A[c * 2 * r + c]);
                for (std::size_t j = 0; j < 2 * r; ++j) A[c * 2 * r + j] = f.mul(A[c * 2 * r + j], inv);
                for (std::size_t i = 0; i < r; ++i) {
                    if (i == c || f.is_zero(A[i * 2 * r + c])) continue;
                    const Element s = A[i * 2 * r + c];
                    for (std::size_t j = 0; j < 2 * r; ++j) A[i * 2 * r + j] = f.sub(A[i * 2 * r + j], f.mul(s, A[c * 2 * r + j]));
                }
            }
            // U_P x = b  =>  x = U_P^{-1} b; inv is indexed [column slot][row slot]
            B.inv.assign(r * r, f.zero());
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) B.inv[i * r + j] = A[i * 2 * r + r + j];
            for (std::size_t i = 0; i < r; ++i) {
                B.rows.push_back(gs[prow[i]]);
                B.cols.push_back(hs[pcol[i]]);
                block_of_row[gs[prow[i]]] = static_cast<int>(blocks.size());
                slot_of_row[gs[prow[i]]] = static_cast<int>(i);
                dead_row[gs[prow[i]]] = 1;
                dead_col[hs[pcol[i]]] = 1;
            }
            blocks.push_back(std::move(B));
        }

        std::vector<int> new_row(nt, -1);
        std::vector<int> tw_prev;
        for (std::size_t g = 0; g < nt; ++g)
            if (!dead_row[g]) {
                new_row[g] = static_cast<int>(tw_prev.size());
                tw_prev.push_back(R.twists[k - 1][g]);
            }
        ModuleOrder new_target(tw_prev);
        std::vector<ModuleVector<F>> kept;
        std::vector<int> tw_cur;
        std::vector<int> new_col(cols.size(), -1);
        // pivot columns of degree a have nonconstant entries only in pivot rows
        // of lower degree, so the blocks are solved from the top degree down
        std::vector<std::size_t> block_order(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) block_order[b] = b;
        std::sort(block_order.begin(), block_order.end(), [&](std::size_t x, std::size_t y) {
            return R.twists[k - 1][blocks[x].rows.front()] > R.twists[k - 1][blocks[y].rows.front()];
        });
        std::map<int, detail::PieceAccumulator<F>> accs;
        for (std::size_t h = 0; h < cols.size(); ++h) {
            if (dead_col[h]) continue;
            const int a = R.twists[k][h];
            auto it_acc = accs.find(a);
            if (it_acc == accs.end())
                it_acc = accs.emplace(a, detail::PieceAccumulator<F>(f, R.ring->nvars(), R.twists[k - 1], a)).first;
            auto& acc = it_acc->second;
            for (const auto& t : cols[h].terms) acc.add(t.mon, t.comp, t.coef);
            for (std::size_t bi : block_order) {
                const Block& B = blocks[bi];
                const std::size_t r = B.rows.size();
                std::vector<std::pair<int, Term>> list;
                for (const auto& t : acc.terms())
                    if (!f.is_zero(t.coef) && block_of_row[t.comp] == static_cast<int>(bi))
                        list.push_back({slot_of_row[t.comp], t});
                if (list.empty()) continue;
                for (std::size_t p = 0; p < r; ++p) {
                    std::unordered_map<Monomial, Element, MonomialHash> lam;
                    for (const auto& [slot, t] : list) {
                        const Element w = B.inv[p * r + slot];
                        if (f.is_zero(w)) continue;
                        auto [it, fresh] = lam.try_emplace(t.mon, f.zero());
                        it->second = f.add(it->second, f.mul(w, t.coef));
                    }
                    for (const auto& [mon, c] : lam) {
                        if (f.is_zero(c)) continue;
                        const Element s = f.neg(c);
                        for (const auto& u : cols[B.cols[p]].terms) acc.add(mon * u.mon, u.comp, f.mul(s, u.coef));
                    }
                }
            }
            std::vector<Term> terms = acc.take();
            for (const auto& t : terms)
                if (dead_row[t.comp]) throw std::logic_error("minimize left an entry in a cancelled row");
            for (auto& t : terms) t.comp = static_cast<std::uint32_t>(new_row[t.comp]);
            new_col[h] = static_cast<int>(tw_cur.size());
            tw_cur.push_back(R.twists[k][h]);
            kept.push_back(make_vector(f, std::move(terms), new_target));
        }
        cols = std::move(kept);
        R.twists[k - 1] = tw_prev;
        R.twists[k] = tw_cur;
        if (k >= 2) {
            auto& below = R.maps[k - 2];
            std::vector<ModuleVector<F>> keep_below;
            for (std::size_t g = 0; g < below.size(); ++g)
                if (!dead_row[g]) keep_below.push_back(std::move(below[g]));
            below = std::move(keep_below);
        }
        if (k < R.maps.size()) {
            ModuleOrder ord(tw_cur);
            for (auto& v : R.maps[k]) {
                std::vector<Term> terms;
                for (const auto& t : v.terms)
                    if (new_col[t.comp] >= 0) terms.push_back({t.mon, static_cast<std::uint32_t>(new_col[t.comp]), t.coef});
                v = make_vector(f, std::move(terms), ord);
            }
        }
    }
    while (!R.maps.empty() && R.maps.back().empty()) {
        R.maps.pop_back();
        R.twists.pop_back();
    }
    return R;
}

/// Minimal free resolution: a Schreyer resolution with its trivial summands
/// split off.
template <CoefficientField F>
FreeResolution<F> minimal_resolution(const CokernelModule<F>& M) {
    auto R = minimize(schreyer_resolution(prune(M)));
    if (static_cast<int>(R.length()) > M.nvars()) throw std::logic_error("resolution longer than the number of variables");
    return R;
}

/// Graded Betti numbers of the module resolved by R, minimal or not:
/// b_{k,j} = dim Tor_k(M, k)_j, read off the constant entries of the maps.
template <CoefficientField F>
BettiTable minimal_betti(const FreeResolution<F>& R) {
    const F& f = R.ring->field();
    // rank of the scalar part of d_k : F_k -> F_{k-1} in internal degree j
    std::map<std::pair<int, int>, long long> rank;
    for (std::size_t k = 1; k < R.twists.size(); ++k) {
        std::map<int, std::vector<std::size_t>> src_by_deg;
        for (std::size_t s = 0; s < R.twists[k].size(); ++s) src_by_deg[R.twists[k][s]].push_back(s);
        for (const auto& [j, srcs] : src_by_deg) {
            std::unordered_map<std::uint32_t, std::size_t> col_of;
            std::vector<std::vector<std::pair<std::size_t, typename F::Element>>> rows;
            for (std::size_t s : srcs) {
                std::vector<std::pair<std::size_t, typename F::Element>> row;
                for (const auto& t : R.maps[k - 1][s].terms)
                    if (t.mon.is_one()) {
                        auto [it, ins] = col_of.try_emplace(t.comp, col_of.size());
                        row.push_back({it->second, t.coef});
                    }
                if (!row.empty()) rows.push_back(std::move(row));
            }
            if (rows.empty()) continue;
            ExactMatrix<F> A(f, rows.size(), col_of.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (const auto& [c, v] : rows[r]) A.set(r, c, v);
            rank[{static_cast<int>(k), j}] = static_cast<long long>(A.rank());
        }
    }
    auto rk = [&](int k, int j) {
        auto it = rank.find({k, j});
        return it == rank.end() ? 0LL : it->second;
    };
    BettiTable T(R.ring->nvars());
    for (std::size_t k = 0; k < R.twists.size(); ++k) {
        std::map<int, long long> count;
        for (int t : R.twists[k]) ++count[t];
        for (const auto& [j, c] : count) {
            long long b = c - rk(static_cast<int>(k), j) - rk(static_cast<int>(k) + 1, j);
            if (b) T.add(static_cast<int>(k), j, b);
        }
    }
    return T;
}

/// Betti table of S/I, by Koszul homology when S/I has finite length and by
/// a minimal resolution otherwise.
template <CoefficientField F>
BettiTable betti_table(const GradedIdeal<F>& I) {
    auto M = CokernelModule<F>::quotient_ring(I);
    if (M.finite_length()) {
        int top = M.top_degree();
        return betti_via_koszul(M, I.nvars(), top + I.nvars());
    }
    return minimal_resolution(M).betti();
}

template <CoefficientField F>
BettiTable betti_table(const CokernelModule<F>& M) {
    if (M.finite_length()) return betti_via_koszul(M, M.nvars(), M.top_degree() + M.nvars());
    return minimal_resolution(M).betti();
}

/// Betti table of the mapping cone of S/(I:F)(-deg F) -> S/I, which resolves
/// S/(I + F) (not necessarily minimally).
template <CoefficientField F>
BettiTable mapping_cone_table(const GradedIdeal<F>& I, const Polynomial<F>& Fp) {
    if (!Fp.is_homogeneous() || Fp.is_zero()) throw std::invalid_argument("mapping cone needs a homogeneous nonzero form");
    if (I.contains(Fp)) throw std::invalid_argument("mapping cone needs F outside I");
    auto Q = ideal_quotient(I, Fp);
    BettiTable A = betti_table(I), B = betti_table(Q);
    BettiTable C(I.nvars());
    for (const auto& [k, v] : A.entries()) C.add(k.first, k.second, v);
    for (const auto& [k, v] : B.entries()) C.add(k.first + 1, k.second + Fp.degree(), v);
    return C;
}

namespace detail {

/// Rank of d_{k+1}^* : Hom(F_k, S)_j -> Hom(F_{k+1}, S)_j, computed as the
/// degree-j dimension of the submodule of Hom(F_{k+1}, S) spanned by the
/// rows of d_{k+1}, from a Gröbner basis truncated at that degree.
template <CoefficientField F>
long long dual_rank(const FreeResolution<F>& R, int k, int j) {
    if (k < 0 || k >= R.length()) return 0;
    const F& f = R.ring->field();
    const int n = R.ring->nvars();
    const auto& src = R.twists[k];
    const auto& dst = R.twists[k + 1];
    int shift = 0;
    for (int a : src) shift = std::max(shift, a);
    for (int a : dst) shift = std::max(shift, a);
    const int D = j + shift;
    if (D < 0) return 0;
    std::vector<int> tw(dst.size());
    for (std::size_t h = 0; h < dst.size(); ++h) tw[h] = shift - dst[h];
    ModuleOrder ord(tw);
    std::vector<std::vector<typename ModuleVector<F>::Term>> rows(src.size());
    for (std::size_t h = 0; h < R.maps[k].size(); ++h)
        for (const auto& t : R.maps[k][h].terms) rows[t.comp].push_back({t.mon, static_cast<std::uint32_t>(h), t.coef});
    std::vector<ModuleVector<F>> gens;
    for (std::size_t g = 0; g < rows.size(); ++g)
        if (!rows[g].empty() && shift - src[g] <= D) gens.push_back(make_vector(f, std::move(rows[g]), ord));
    if (gens.empty()) return 0;
    GroebnerOptions opt;
    opt.max_degree = D;
    auto gb = module_groebner(f, n, ord, gens, opt);
    std::vector<std::vector<Monomial>> leads(dst.size());
    for (const auto& v : gb.basis) leads[v.lead().comp].push_back(v.lead().mon);
    long long dim = 0;
    for (std::size_t h = 0; h < dst.size(); ++h) {
        const int e = D - tw[h];
        if (e < 0 || leads[h].empty()) continue;
        for (const auto& m : monomials_of_degree(n, e))
            for (const auto& l : leads[h])
                if (l.divides(m)) {
                    ++dim;
                    break;
                }
    }
    return dim;
}

}  // namespace detail

/// dim_k Ext^i(M, S)_j from a free resolution of M, minimal or not.
template <CoefficientField F>
long long ext_graded_piece(const FreeResolution<F>& R, int i, int j) {
    if (i < 0 || i > R.length()) return 0;
    const int n = R.ring->nvars();
    long long dim = 0;
    for (int a : R.twists[i])
        if (j + a >= 0) dim += binomial(j + a + n - 1, n - 1);
    return dim - detail::dual_rank(R, i, j) - detail::dual_rank(R, i - 1, j);
}

/// Rank of the scalar coefficient matrix of a vector of linear forms.
template <CoefficientField F>
std::size_t syzygy_rank(const std::vector<Polynomial<F>>& entries) {
    if (entries.empty()) return 0;
    const int n = entries.front().nvars();
    F f = entries.front().field();
    ExactMatrix<F> A(f, entries.size(), n);
    for (std::size_t r = 0; r < entries.size(); ++r)
        for (const auto& t : entries[r].terms()) {
            if (t.mon.degree() != 1) throw std::invalid_argument("syzygy_rank needs linear entries");
            for (int v = 0; v < n; ++v)
                if (t.mon[v]) A.set(r, v, t.coef);
        }
    return A.rank();
}

}  // namespace gor
