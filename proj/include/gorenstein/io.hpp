#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "classify.hpp"
#include "cy.hpp"
#include "hilbert.hpp"
#include "resolution.hpp"

namespace gor {

/// Malformed input text; line and column are 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, int line, int column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    static std::string format(const std::string& what, int line, int column) {
        std::string at;
        if (line > 0) at = "line " + std::to_string(line);
        if (column > 0) at += ", column " + std::to_string(column);
        return at.empty() ? what : at + ": " + what;
    }
    int line_, column_;
};

class InhomogeneousError : public ParseError {
  public:
    using ParseError::ParseError;
};

class UnknownVariableError : public ParseError {
  public:
    using ParseError::ParseError;
};

/// An ideal file split into its header and generator lines, before any
/// field is chosen. Blank lines and `#` comments are skipped.
struct IdealSource {
    FieldDescriptor field;
    std::vector<std::string> vars;
    std::vector<std::pair<int, std::string>> lines;  // (line number, expression)
};

namespace detail {

/// Drops a trailing `#` comment and trailing blanks; leading blanks stay so
/// that reported columns match the file.
inline std::string strip_comment(const std::string& s) {
    auto p = s.find('#');
    std::string t = p == std::string::npos ? s : s.substr(0, p);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    return t;
}

inline std::string trim_left(const std::string& s) {
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    return s.substr(b);
}

inline bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// Recursive-descent parser for one generator line.
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := power (('*'|'/') power)*
///   power  := atom ['^' integer]
///   atom   := integer | name | '(' expr ')'
/// Division is by nonzero constants only.
template <CoefficientField F>
class ExpressionParser {
  public:
    using Poly = Polynomial<F>;

    ExpressionParser(const RingPtr<F>& ring, const std::string& text, int line)
        : ring_(ring), s_(text), line_(line) {}

    Poly parse() {
        auto p = expr();
        skip();
        if (pos_ < s_.size()) {
            if (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_')
                fail("expected an operator (write products with '*')");
            fail(std::string("unexpected '") + s_[pos_] + "'");
        }
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, line_, static_cast<int>(pos_) + 1);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Poly constant(const mpz_class& v) const {
        return Poly::constant(ring_->field(), ring_->nvars(), ring_->field().from_mpz(v));
    }

    Poly expr() {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Poly acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = power();
        while (true) {
            if (accept('*')) {
                acc = acc * power();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Poly d = power();
                if (d.is_zero() || d.degree() != 0) {
                    pos_ = at;
                    skip();
                    fail("division only by a nonzero constant");
                }
                acc = acc.scaled(ring_->field().inv(d.terms().front().coef));
            } else {
                return acc;
            }
        }
    }

    Poly power() {
        Poly base = atom();
        if (!accept('^')) return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        if (pos_ - start > 3) fail("exponent too large");
        int e = std::stoi(s_.substr(start, pos_ - start));
        Poly out = constant(1);
        for (int k = 0; k < e; ++k) out = out * base;
        return out;
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(mpz_class(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            const auto& names = ring_->names();
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end())
                throw UnknownVariableError("unknown variable '" + name + "'", line_, static_cast<int>(start) + 1);
            return ring_->var(static_cast<int>(it - names.begin()));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    RingPtr<F> ring_;
    std::string s_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Splits an ideal file into header and generator lines.
inline IdealSource read_ideal_source(const std::string& text) {
    IdealSource src;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0, stage = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto body = detail::strip_comment(raw);
        auto line = detail::trim_left(body);
        if (line.empty()) continue;
        if (stage == 0) {
            if (line.rfind("field", 0) != 0 || (line.size() > 5 && !std::isspace(static_cast<unsigned char>(line[5]))))
                throw ParseError("expected 'field GF(p)' or 'field QQ'", lineno, 1);
            try {
                src.field = FieldDescriptor::parse(line.substr(5));
            } catch (const FieldError& e) {
                throw ParseError(e.what(), lineno, 7);
            }
            stage = 1;
        } else if (stage == 1) {
            std::istringstream words(line);
            std::string w;
            words >> w;
            if (w != "vars") throw ParseError("expected 'vars' followed by variable names", lineno, 1);
            while (words >> w) {
                if (!detail::is_identifier(w)) throw ParseError("bad variable name '" + w + "'", lineno);
                if (std::find(src.vars.begin(), src.vars.end(), w) != src.vars.end())
                    throw ParseError("variable '" + w + "' declared twice", lineno);
                src.vars.push_back(w);
            }
            if (src.vars.empty()) throw ParseError("no variables declared", lineno);
            stage = 2;
        } else {
            src.lines.emplace_back(lineno, body);
        }
    }
    if (stage < 2) throw ParseError(stage == 0 ? "missing 'field' line" : "missing 'vars' line", lineno + 1);
    return src;
}

/// Parses the generator lines over `field`; each must be homogeneous.
template <CoefficientField F>
GradedIdeal<F> parse_ideal_as(const IdealSource& src, const F& field) {
    auto ring = make_ring(field, src.vars);
    std::vector<Polynomial<F>> gens;
    for (const auto& [lineno, text] : src.lines) {
        auto p = detail::ExpressionParser<F>(ring, text, lineno).parse();
        if (!p.is_homogeneous())
            throw InhomogeneousError("generator is not homogeneous", lineno);
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    return GradedIdeal<F>(ring, std::move(gens));
}

using AnyIdeal = std::variant<GradedIdeal<PrimeField>, GradedIdeal<RationalField>>;

/// Parses an ideal file over the field named in its header.
inline AnyIdeal parse_ideal(const std::string& text) {
    auto src = read_ideal_source(text);
    if (src.field.rational) return parse_ideal_as(src, RationalField{});
    return parse_ideal_as(src, PrimeField{src.field.prime});
}

template <CoefficientField F>
std::string render_polynomial(const Polynomial<F>& p, const std::vector<std::string>& names) {
    return p.to_string(names);
}

/// Ideal file text: header, then one generator per line.
template <CoefficientField F>
std::string render_ideal(const GradedIdeal<F>& I) {
    std::string out = "field " + I.field().name() + "\nvars";
    for (const auto& v : I.ring()->names()) out += " " + v;
    out += "\n";
    for (const auto& g : I.generators()) out += render_polynomial(g, I.ring()->names()) + "\n";
    return out;
}

enum class BettiStyle { Compact, Wide };

/// Text grid: a column-index header, a "total:" row, then one row per
/// j - i labelled "r:". Zeros print as "." (compact) or "--" (wide).
inline std::string render_betti(const BettiTable& T, BettiStyle style = BettiStyle::Compact) {
    const std::string zero = style == BettiStyle::Compact ? "." : "--";
    const int c0 = T.empty() ? 0 : std::min(0, T.min_column());
    const int c1 = T.empty() ? 0 : T.pdim();
    const int r0 = T.empty() ? 0 : T.min_row();
    const int r1 = T.empty() ? -1 : T.regularity();
    std::vector<long long> totals(c1 - c0 + 1, 0);
    for (const auto& [k, v] : T.entries()) totals[k.first - c0] += v;

    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> labels;
    {
        std::vector<std::string> head;
        for (int i = c0; i <= c1; ++i) head.push_back(std::to_string(i));
        grid.push_back(head);
        labels.push_back("");
        std::vector<std::string> tot;
        for (auto v : totals) tot.push_back(std::to_string(v));
        grid.push_back(tot);
        labels.push_back("total:");
    }
    for (int r = r0; r <= r1; ++r) {
        std::vector<std::string> row;
        for (int i = c0; i <= c1; ++i) {
            long long v = T.get(i, i + r);
            row.push_back(v ? std::to_string(v) : zero);
        }
        grid.push_back(row);
        labels.push_back(std::to_string(r) + ":");
    }
    std::size_t lw = 0;
    for (const auto& l : labels) lw = std::max(lw, l.size());
    std::vector<std::size_t> cw(c1 - c0 + 1, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) cw[c] = std::max(cw[c], row[c].size());
    std::string out;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        std::string line = std::string(lw - labels[r].size(), ' ') + labels[r];
        for (std::size_t c = 0; c < grid[r].size(); ++c)
            line += " " + std::string(cw[c] - grid[r][c].size(), ' ') + grid[r][c];
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    if (T.truncated()) out += "(truncated)\n";
    return out;
}

/// Reads back the output of render_betti in either style.
inline BettiTable parse_betti(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<int> cols;
    std::vector<long long> totals;
    bool have_totals = false;
    BettiTable T;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream words(line);
        std::string first;
        if (!(words >> first)) continue;
        if (first == "(truncated)") {
            T.set_truncated(true);
            continue;
        }
        std::vector<std::string> rest;
        std::string w;
        while (words >> w) rest.push_back(w);
        if (cols.empty()) {
            rest.insert(rest.begin(), first);
            for (const auto& c : rest) {
                try {
                    std::size_t used = 0;
                    cols.push_back(std::stoi(c, &used));
                    if (used != c.size()) throw std::invalid_argument(c);
                } catch (const std::exception&) {
                    throw ParseError("bad column index '" + c + "'", lineno);
                }
            }
            continue;
        }
        if (rest.size() != cols.size()) throw ParseError("row has the wrong number of entries", lineno);
        std::vector<long long> vals;
        for (const auto& c : rest) {
            if (c == "." || c == "--") {
                vals.push_back(0);
                continue;
            }
            try {
                std::size_t used = 0;
                vals.push_back(std::stoll(c, &used));
                if (used != c.size() || vals.back() < 0) throw std::invalid_argument(c);
            } catch (const std::exception&) {
                throw ParseError("bad entry '" + c + "'", lineno);
            }
        }
        if (first == "total:") {
            totals = vals;
            have_totals = true;
            continue;
        }
        if (first.size() < 2 || first.back() != ':') throw ParseError("expected a row label like '0:'", lineno, 1);
        int r;
        try {
            r = std::stoi(first.substr(0, first.size() - 1));
        } catch (const std::exception&) {
            throw ParseError("bad row label '" + first + "'", lineno, 1);
        }
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (vals[c]) T.set(cols[c], cols[c] + r, vals[c]);
    }
    if (!have_totals) throw ParseError("missing 'total:' row", lineno);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        long long s = 0;
        for (const auto& [k, v] : T.entries())
            if (k.first == cols[c]) s += v;
        if (s != totals[c]) throw ParseError("totals do not match the rows", 0);
    }
    return T;
}

inline std::string render_hilbert(const HilbertData& h) {
    std::ostringstream out;
    out << "hilbert function:";
    for (auto v : h.values) out << " " << v;
    out << "\nnumerator over (1-t)^" << h.nvars << ":";
    for (auto v : h.numerator) out << " " << v;
    out << "\nreduced numerator over (1-t)^" << h.dimension << ":";
    for (auto v : h.reduced_numerator) out << " " << v;
    out << "\nkrull dimension: " << h.dimension << "\n";
    return out.str();
}

/// Coefficients c_0..c_{dim-1} of the Hilbert polynomial as rational strings.
inline std::vector<std::string> hilbert_polynomial_coefficients(const HilbertData& h) {
    const int m = h.dimension;
    if (m == 0) return {};
    // Newton interpolation at t = 0..m-1, then expansion into the monomial basis
    std::vector<mpq_class> y(m);
    for (int t = 0; t < m; ++t) y[t] = h.polynomial_value(t);
    for (int k = 1; k < m; ++k)
        for (int t = m - 1; t >= k; --t) y[t] = (y[t] - y[t - 1]) / k;
    std::vector<mpq_class> coef(m, 0);
    for (int k = m - 1; k >= 0; --k) {
        // coef = coef * (t - k) + y[k]
        for (int d = m - 1; d >= 1; --d) coef[d] = coef[d - 1] - coef[d] * k;
        coef[0] = -coef[0] * k + y[k];
    }
    std::vector<std::string> out;
    for (auto& c : coef) {
        c.canonicalize();
        out.push_back(c.get_str());
    }
    return out;
}

using json = nlohmann::ordered_json;

inline json to_json(const BettiTable& T) {
    json entries = json::array();
    for (const auto& [k, v] : T.entries()) entries.push_back({{"i", k.first}, {"j", k.second}, {"value", v}});
    json rows = json::array();
    if (!T.empty())
        for (int r = T.min_row(); r <= T.regularity(); ++r) rows.push_back({{"row", r}, {"values", T.row(r)}});
    return {{"entries", entries},
            {"totals", T.totals()},
            {"rows", rows},
            {"pdim", T.pdim()},
            {"regularity", T.regularity()},
            {"truncated", T.truncated()}};
}

inline BettiTable betti_from_json(const json& j) {
    BettiTable T;
    for (const auto& e : j.at("entries")) T.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("value").get<long long>());
    T.set_truncated(j.value("truncated", false));
    return T;
}

inline json to_json(const HilbertData& h) {
    return {{"nvars", h.nvars},
            {"values", h.values},
            {"numerator", h.numerator},
            {"reduced_numerator", h.reduced_numerator},
            {"dimension", h.dimension},
            {"degree", h.multiplicity()},
            {"hilbert_polynomial", hilbert_polynomial_coefficients(h)},
            {"exact_series", h.exact_series}};
}

inline json to_json(const ClassifiedTable& c) {
    return {{"label", c.label}, {"a", c.a}, {"b", c.b}, {"c", c.c}, {"h2", c.h2()}, {"hilbert", c.hilbert()},
            {"betti", to_json(c.table)}};
}

inline json to_json(const CYInvariants& c) {
    return {{"chi", c.chi},
            {"h11", c.h11},
            {"h12", c.h12},
            {"method", c.method},
            {"pdim", c.pdim},
            {"ambient", c.ambient},
            {"conormal_betti", to_json(c.conormal)},
            {"section_certified", c.section_certified}};
}

template <CoefficientField F>
json to_json(const GradedIdeal<F>& I) {
    json gens = json::array();
    for (const auto& g : I.generators()) gens.push_back(render_polynomial(g, I.ring()->names()));
    return {{"field", I.field().name()}, {"vars", I.ring()->names()}, {"generators", gens}};
}

}  // namespace gor
