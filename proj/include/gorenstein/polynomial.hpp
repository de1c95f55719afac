#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace gor {

/// Multivariate polynomial with exact coefficients, terms kept in
/// decreasing grevlex order with no zero coefficients.
template <CoefficientField F>
class Polynomial {
  public:
    using Element = typename F::Element;
    struct Term {
        Monomial mon;
        Element coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Polynomial() = default;
    Polynomial(F field, int nvars) : field_(std::move(field)), nvars_(nvars) {
        if (nvars < 0 || nvars > kMaxVars)
            throw DimensionError("polynomial rings support 0.." + std::to_string(kMaxVars) + " variables");
    }

    static Polynomial constant(F field, int nvars, const Element& c) {
        Polynomial p(field, nvars);
        if (!field.is_zero(c)) p.terms_.push_back({Monomial{}, c});
        return p;
    }
    static Polynomial monomial(F field, int nvars, const Monomial& m, const Element& c) {
        Polynomial p(field, nvars);
        if (!field.is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }
    static Polynomial variable(F field, int nvars, int i) {
        if (i < 0 || i >= nvars) throw DimensionError("variable index out of range");
        return monomial(field, nvars, Monomial::variable(i), field.one());
    }
    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    static Polynomial from_terms(F field, int nvars, std::vector<Term> terms) {
        Polynomial p(field, nvars);
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const F& field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const Monomial& lead_monomial() const { return terms_.front().mon; }
    const Element& lead_coefficient() const { return terms_.front().coef; }

    /// Largest total degree of a term; -1 for zero.
    int degree() const { return terms_.empty() ? -1 : terms_.front().mon.degree(); }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mon.degree() != terms_.front().mon.degree()) return false;
        return true;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }

    Element coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mon == m) return t.coef;
        return field_.zero();
    }

    /// Graded pieces keyed by degree, in increasing degree.
    std::vector<std::pair<int, Polynomial>> homogeneous_components() const {
        std::vector<std::pair<int, Polynomial>> out;
        for (const auto& t : terms_) {
            auto it = std::find_if(out.begin(), out.end(), [&](auto& kv) { return kv.first == t.mon.degree(); });
            if (it == out.end()) {
                out.emplace_back(t.mon.degree(), Polynomial(field_, nvars_));
                it = std::prev(out.end());
            }
            it->second.terms_.push_back(t);
        }
        std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
        return out;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coef = field_.neg(t.coef);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, field_.one()); }
    Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, field_.neg(field_.one())); }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, a.field_.one()); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return combine(a, b, a.field_.neg(a.field_.one()));
    }

    Polynomial scaled(const Element& c) const {
        if (field_.is_zero(c)) return Polynomial(field_, nvars_);
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coef = field_.mul(t.coef, c);
        return r;
    }
    Polynomial times_monomial(const Monomial& m, const Element& c) const {
        if (field_.is_zero(c)) return Polynomial(field_, nvars_);
        Polynomial r(field_, nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mon * m, field_.mul(t.coef, c)});
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.nvars_);
        if (a.size() == 1) return b.times_monomial(a.terms_[0].mon, a.terms_[0].coef);
        if (b.size() == 1) return a.times_monomial(b.terms_[0].mon, b.terms_[0].coef);
        std::unordered_map<Monomial, Element, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        const F& f = a.field_;
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) {
                auto [it, inserted] = acc.try_emplace(s.mon * t.mon, f.zero());
                it->second = f.add(it->second, f.mul(s.coef, t.coef));
            }
        Polynomial r(f, a.nvars_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!f.is_zero(c)) r.terms_.push_back({m, c});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grevlex_cmp(x.mon, y.mon) > 0; });
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(int e) const {
        Polynomial r = constant(field_, nvars_, field_.one());
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// Divides by the leading coefficient.
    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(lead_coefficient()));
    }

    Polynomial partial(int var) const {
        Polynomial r(field_, nvars_);
        for (const auto& t : terms_) {
            int e = t.mon[var];
            if (e == 0) continue;
            Element c = field_.mul(t.coef, field_.from_int(e));
            if (field_.is_zero(c)) continue;
            r.terms_.push_back({t.mon / Monomial::variable(var), c});
        }
        r.canonicalize();
        return r;
    }

    Element evaluate(std::span<const Element> point) const {
        if (static_cast<int>(point.size()) != nvars_) throw DimensionError("evaluation point has wrong length");
        Element total = field_.zero();
        for (const auto& t : terms_) {
            Element v = t.coef;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < t.mon[i]; ++k) v = field_.mul(v, point[i]);
            total = field_.add(total, v);
        }
        return total;
    }

    /// Ring map x_i -> images[i]; images live in a (possibly different) ring.
    Polynomial substitute(std::span<const Polynomial> images) const {
        if (static_cast<int>(images.size()) != nvars_) throw DimensionError("substitution has wrong arity");
        int target_vars = images.empty() ? 0 : images[0].nvars();
        Polynomial result(field_, target_vars);
        // cache powers of each image
        std::vector<std::vector<Polynomial>> powers(nvars_);
        for (const auto& t : terms_) {
            Polynomial term = constant(field_, target_vars, t.coef);
            for (int i = 0; i < nvars_; ++i) {
                int e = t.mon[i];
                if (e == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(field_, target_vars, field_.one()));
                while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
                term *= pw[e];
            }
            result += term;
        }
        return result;
    }

    std::string to_string(std::span<const std::string> names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            std::string c = field_.to_string(t.coef);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c = c.substr(1);
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            if (t.mon.is_one()) {
                out += c;
            } else {
                if (c != "1") out += c + "*";
                out += t.mon.to_string(names);
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return grevlex_cmp(x.mon, y.mon) > 0; });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().mon == t.mon)
                merged.back().coef = field_.add(merged.back().coef, t.coef);
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [&](const Term& t) { return field_.is_zero(t.coef); });
        terms_ = std::move(merged);
    }

  private:
    static void check_compatible(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_) throw DimensionError("polynomials live in rings of different dimension");
    }

    static Polynomial combine(const Polynomial& a, const Polynomial& b, const Element& scale) {
        check_compatible(a, b);
        const F& f = a.field_;
        Polynomial r(f, a.nvars_);
        r.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            int c = i == a.terms_.end() ? -1 : j == b.terms_.end() ? 1 : grevlex_cmp(i->mon, j->mon);
            if (c > 0) {
                r.terms_.push_back(*i++);
            } else if (c < 0) {
                r.terms_.push_back({j->mon, f.mul(j->coef, scale)});
                ++j;
            } else {
                Element s = f.add(i->coef, f.mul(j->coef, scale));
                if (!f.is_zero(s)) r.terms_.push_back({i->mon, s});
                ++i;
                ++j;
            }
        }
        return r;
    }

    F field_{};
    int nvars_ = 0;
    std::vector<Term> terms_;
};

/// Standard-graded polynomial ring k[x_0..x_n] with named variables.
template <CoefficientField F>
class PolynomialRing {
  public:
    using Poly = Polynomial<F>;
    using Element = typename F::Element;

    PolynomialRing(F field, std::vector<std::string> names) : field_(std::move(field)), names_(std::move(names)) {
        if (names_.size() > static_cast<std::size_t>(kMaxVars))
            throw DimensionError("at most " + std::to_string(kMaxVars) + " variables are supported");
    }
    PolynomialRing(F field, int nvars, const std::string& prefix = "x") : field_(std::move(field)) {
        if (nvars < 0 || nvars > kMaxVars)
            throw DimensionError("at most " + std::to_string(kMaxVars) + " variables are supported");
        for (int i = 0; i < nvars; ++i) names_.push_back(prefix + std::to_string(i));
    }

    const F& field() const { return field_; }
    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    Poly zero() const { return Poly(field_, nvars()); }
    Poly one() const { return Poly::constant(field_, nvars(), field_.one()); }
    Poly constant(std::int64_t c) const { return Poly::constant(field_, nvars(), field_.from_int(c)); }
    Poly var(int i) const { return Poly::variable(field_, nvars(), i); }
    Poly monomial(const Monomial& m, const Element& c) const { return Poly::monomial(field_, nvars(), m, c); }
    Poly monomial(const Monomial& m) const { return monomial(m, field_.one()); }

    /// dim_k of the degree-d graded piece.
    long long piece_dimension(int d) const { return d < 0 ? 0 : binomial(nvars() - 1 + d, d); }

    template <class Rng>
    Poly random_form(int degree, Rng& rng) const {
        std::vector<typename Poly::Term> terms;
        for (const auto& m : monomials_of_degree(nvars(), degree)) terms.push_back({m, field_.random(rng)});
        return Poly::from_terms(field_, nvars(), std::move(terms));
    }

    std::string to_string(const Poly& p) const { return p.to_string(names_); }

    friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
        return a.field_ == b.field_ && a.names_ == b.names_;
    }

  private:
    F field_;
    std::vector<std::string> names_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolynomialRing<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, int nvars, const std::string& prefix = "x") {
    return std::make_shared<const PolynomialRing<F>>(std::move(field), nvars, prefix);
}
template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> names) {
    return std::make_shared<const PolynomialRing<F>>(std::move(field), std::move(names));
}

/// Applies a constant-coefficient differential operator (a polynomial in
/// the dual variables d/dx_i) to `target`, term by term.
template <CoefficientField F>
Polynomial<F> diff_apply(const Polynomial<F>& op, const Polynomial<F>& target) {
    if (op.nvars() != target.nvars()) throw DimensionError("operator and target have different variable counts");
    const F& f = target.field();
    std::vector<typename Polynomial<F>::Term> out;
    for (const auto& o : op.terms())
        for (const auto& t : target.terms()) {
            if (!o.mon.divides(t.mon)) continue;
            typename F::Element c = f.mul(o.coef, t.coef);
            for (int i = 0; i < target.nvars(); ++i) {
                int b = t.mon[i];
                for (int k = 0; k < o.mon[i]; ++k) c = f.mul(c, f.from_int(b - k));
            }
            if (!f.is_zero(c)) out.push_back({t.mon / o.mon, c});
        }
    return Polynomial<F>::from_terms(f, target.nvars(), std::move(out));
}

}  // namespace gor
