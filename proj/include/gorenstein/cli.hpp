#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apolar.hpp"
#include "classify.hpp"
#include "constructions.hpp"
#include "cy.hpp"
#include "io.hpp"

namespace gor::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kGenericity = 3, kPrecondition = 4 };

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string field;  // empty: take it from the input file, else GF(32003)
    std::uint64_t seed = 1;
    bool json = false;
    bool explain = false;
    bool wide = false;
};

/// "2,2,1", "1x15", "1×15" and mixtures like "2,1x3".
inline std::vector<int> parse_degree_list(const std::string& text) {
    std::vector<int> out;
    std::string s = text;
    for (std::size_t p; (p = s.find("\xC3\x97")) != std::string::npos;) s.replace(p, 2, "x");
    std::stringstream in(s);
    std::string item;
    auto number = [&](const std::string& w) {
        if (w.empty() || w.size() > 4 || w.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad degree list '" + text + "'");
        return std::stoi(w);
    };
    while (std::getline(in, item, ',')) {
        auto x = item.find_first_of("xX*");
        if (x == std::string::npos) {
            out.push_back(number(item));
        } else {
            int d = number(item.substr(0, x)), k = number(item.substr(x + 1));
            for (int i = 0; i < k; ++i) out.push_back(d);
        }
    }
    if (out.empty()) throw UsageError("empty degree list");
    return out;
}

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot read '" + path + "'", 0);
        buf << f.rdbuf();
    }
    return buf.str();
}

inline FieldDescriptor field_for(const Options& o, const IdealSource* src) {
    if (!o.field.empty()) return FieldDescriptor::parse(o.field);
    if (src) return src->field;
    return FieldDescriptor{};
}

inline json envelope(const std::string& command, const FieldDescriptor& f, const Options& o) {
    return {{"command", command}, {"field", f.name()}, {"seed", o.seed}};
}

struct Context {
    const Options& opt;
    std::istream& in;
    std::ostream& out;
};

/// Loads an ideal file and hands it to `fn` over the selected field.
template <class Fn>
void with_ideal(const Context& cx, const std::string& path, Fn&& fn) {
    auto src = read_ideal_source(read_input(path, cx.in));
    auto desc = field_for(cx.opt, &src);
    with_field(desc, [&](auto field) {
        using F = decltype(field);
        GradedIdeal<F> I = [&] {
            try {
                return parse_ideal_as(src, field);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(e.what(), 0);
            }
        }();
        fn(I, desc);
    });
}

inline void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline void cmd_tables(const Context& cx) {
    FieldDescriptor f = field_for(cx.opt, nullptr);
    auto all = enumerate_tables();
    if (cx.opt.json) {
        json j = envelope("tables", f, cx.opt);
        j["tables"] = json::array();
        for (const auto& ct : all) {
            auto e = to_json(ct);
            if (cx.opt.explain) {
                e["explain"] = json::array();
                for (const auto& s : explain(ct.a, ct.b, ct.c)) e["explain"].push_back({{"claim", s.claim}, {"holds", s.holds}});
            }
            j["tables"].push_back(e);
        }
        print_json(cx.out, j);
        return;
    }
    bool first = true;
    for (const auto& ct : all) {
        if (!first) cx.out << "\n";
        first = false;
        cx.out << ct.label << "  (a, b, c) = (" << ct.a << ", " << ct.b << ", " << ct.c << ")\n";
        cx.out << render_betti(ct.table, cx.opt.wide ? BettiStyle::Wide : BettiStyle::Compact);
        if (cx.opt.explain)
            for (const auto& s : explain(ct.a, ct.b, ct.c)) cx.out << "  [" << (s.holds ? "ok" : "FAILS") << "] " << s.claim << "\n";
    }
}

inline void cmd_betti(const Context& cx, const std::string& path) {
    with_ideal(cx, path, [&](const auto& I, const FieldDescriptor& f) {
        auto T = betti_table(I);
        auto match = match_table(T);
        if (cx.opt.json) {
            json j = envelope("betti", f, cx.opt);
            j["nvars"] = I.nvars();
            j["betti"] = to_json(T);
            j["label"] = match ? json(match->label) : json(nullptr);
            print_json(cx.out, j);
            return;
        }
        cx.out << render_betti(T, cx.opt.wide ? BettiStyle::Wide : BettiStyle::Compact);
        if (cx.opt.explain) {
            bool artinian = hilbert_series(I, 0).dimension == 0;
            cx.out << (artinian ? "computed from Koszul homology of the finite-length quotient\n"
                                : "computed from a minimal free resolution\n");
        }
    });
}

inline void cmd_hf(const Context& cx, const std::string& path, int t_max) {
    with_ideal(cx, path, [&](const auto& I, const FieldDescriptor& f) {
        auto h = hilbert_series(I, t_max);
        if (cx.opt.json) {
            json j = envelope("hf", f, cx.opt);
            j["hilbert"] = to_json(h);
            print_json(cx.out, j);
            return;
        }
        cx.out << render_hilbert(h);
        cx.out << "degree: " << h.multiplicity() << "\n";
        if (h.dimension > 0) {
            auto c = hilbert_polynomial_coefficients(h);
            cx.out << "hilbert polynomial coefficients (t^0 first):";
            for (const auto& s : c) cx.out << " " << s;
            cx.out << "\n";
        }
    });
}

template <CoefficientField F>
void report_apolar(const Context& cx, const FieldDescriptor& f, const RingPtr<F>& ring, const Polynomial<F>& form,
                   const json& extra) {
    auto I = apolar_ideal(ring, form);
    auto T = betti_table(I);
    auto h = apolar_hilbert_values(form);
    auto match = match_table(T);
    if (cx.opt.json) {
        json j = envelope("apolar", f, cx.opt);
        for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
        j["form"] = render_polynomial(form, ring->names());
        j["hilbert"] = h;
        j["ideal"] = to_json(I);
        j["betti"] = to_json(T);
        j["label"] = match ? json(match->label) : json(nullptr);
        print_json(cx.out, j);
        return;
    }
    if (extra.contains("certified")) cx.out << "# random form, seed " << cx.opt.seed << "\n";
    cx.out << "hilbert function:";
    for (auto v : h) cx.out << " " << v;
    cx.out << "\n" << render_ideal(I) << render_betti(T, cx.opt.wide ? BettiStyle::Wide : BettiStyle::Compact);
    if (match) cx.out << "label: " << match->label << "\n";
}

inline void cmd_apolar(const Context& cx, const std::string& path, int random_degree, int random_nvars) {
    if (random_degree > 0) {
        if (random_nvars < 1) throw UsageError("--random needs --nvars");
        FieldDescriptor f = field_for(cx.opt, nullptr);
        with_field(f, [&](auto field) {
            auto ring = make_ring(field, random_nvars);
            auto g = generic_form(ring, random_degree, cx.opt.seed);
            if (!g.certified)
                throw GenericityError("no two seeds agreed on the apolar Hilbert function after " +
                                      std::to_string(g.attempts) + " attempts");
            report_apolar(cx, f, ring, g.form, json{{"certified", true}, {"form_seed", g.seed}});
        });
        return;
    }
    with_ideal(cx, path, [&](const auto& I, const FieldDescriptor& f) {
        if (I.generators().size() != 1) throw std::invalid_argument("apolar needs a file with exactly one form");
        report_apolar(cx, f, I.ring(), I.generators().front(), json::object());
    });
}

inline void cmd_construct(const Context& cx, const std::string& name, const std::vector<std::string>& params,
                          int nvars) {
    NamedFamily fam;
    try {
        fam.tag = parse_family(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    fam.seed = cx.opt.seed;
    fam.nvars = nvars;
    if (fam.tag == Family::CompleteIntersection) {
        if (params.size() != 1) throw UsageError("ci needs one degree list, e.g. 'construct ci 2,2,2,2'");
        fam.degrees = parse_degree_list(params.front());
    } else if (!params.empty()) {
        throw UsageError(family_name(fam.tag) + " takes no parameters");
    }
    FieldDescriptor f = field_for(cx.opt, nullptr);
    with_field(f, [&](auto field) {
        int reseeds = 0;
        auto I = build_named(field, fam, &reseeds);
        if (cx.opt.json) {
            json j = envelope("construct", f, cx.opt);
            j["family"] = family_name(fam.tag);
            j["reseeds"] = reseeds;
            j["ideal"] = to_json(I);
            print_json(cx.out, j);
            return;
        }
        cx.out << "# construct " << family_name(fam.tag);
        for (const auto& p : params) cx.out << " " << p;
        cx.out << " seed " << cx.opt.seed;
        if (reseeds) cx.out << " (redrawn " << reseeds << " times)";
        cx.out << "\n" << render_ideal(I);
    });
}

inline void cmd_reduce(const Context& cx, const std::string& path, const std::string& by) {
    if (by.empty()) throw UsageError("reduce needs --by d1,d2,...");
    auto degrees = parse_degree_list(by);
    with_ideal(cx, path, [&](const auto& I, const FieldDescriptor& f) {
        auto red = artinian_reduction(I, degrees, cx.opt.seed);
        if (!red.regular)
            throw GenericityError("the drawn forms do not form a regular sequence on S/I (Hilbert series check)");
        if (cx.opt.json) {
            json j = envelope("reduce", f, cx.opt);
            j["degrees"] = degrees;
            j["eliminated"] = red.eliminated;
            j["reseeds"] = red.reseeds;
            j["ideal"] = to_json(red.ideal);
            print_json(cx.out, j);
            return;
        }
        cx.out << "# reduce --by " << by << " seed " << cx.opt.seed << "\n";
        if (cx.opt.explain) {
            cx.out << "# eliminated:";
            for (const auto& v : red.eliminated) cx.out << " " << v;
            cx.out << "\n# regular sequence certified by the Hilbert series\n";
        }
        cx.out << render_ideal(red.ideal);
    });
}

inline void cmd_classify(const Context& cx, const std::string& path) {
    with_ideal(cx, path, [&](const auto& I, const FieldDescriptor& f) {
        auto T = betti_table(I);
        auto match = match_table(T);
        auto [a, b, c] = parameters_of(T);
        if (cx.opt.json) {
            json j = envelope("classify", f, cx.opt);
            j["label"] = match ? json(match->label) : json(nullptr);
            j["parameters"] = {a, b, c};
            j["betti"] = to_json(T);
            if (cx.opt.explain) {
                j["explain"] = json::array();
                for (const auto& s : explain(a, b, c)) j["explain"].push_back({{"claim", s.claim}, {"holds", s.holds}});
            }
            print_json(cx.out, j);
            return;
        }
        cx.out << (match ? match->label : std::string("none")) << "\n";
        if (cx.opt.explain) {
            cx.out << "(a, b, c) = (" << a << ", " << b << ", " << c << ")\n";
            cx.out << render_betti(T, cx.opt.wide ? BettiStyle::Wide : BettiStyle::Compact);
            if (a >= 0 && a <= 6)
                for (const auto& s : explain(a, b, c))
                    cx.out << "  [" << (s.holds ? "ok" : "FAILS") << "] " << s.claim << "\n";
        }
    });
}

inline void cmd_cy(const Context& cx, const std::string& path) {
    with_ideal(cx, path, [&](const auto& I, const FieldDescriptor& f) {
        auto c = hodge_h11_h12(I, cx.opt.seed);
        const char* assumption = "X is assumed smooth, projectively normal and Calabi-Yau; not checked";
        const char* convention = "chi(I/I^2) = HP_{S/I^2}(0) - HP_{S/I}(0); twist term uses HP_{S/I}(-1)";
        if (cx.opt.json) {
            json j = envelope("cy", f, cx.opt);
            j["invariants"] = to_json(c);
            j["assumptions"] = assumption;
            j["euler_convention"] = convention;
            print_json(cx.out, j);
            return;
        }
        cx.out << "chi = " << c.chi << "\nh11 = " << c.h11 << "\nh12 = " << c.h12 << "\nmethod = " << c.method
               << "\n";
        if (cx.opt.explain) {
            cx.out << "ambient P^" << c.ambient << ", pdim(I/I^2) = " << c.pdim << " vs n-2 = " << c.ambient - 2
                   << "\n";
            cx.out << "conormal Betti table"
                   << (c.section_certified ? " (from a certified generic linear section)" : "") << ":\n";
            cx.out << render_betti(c.conormal, cx.opt.wide ? BettiStyle::Wide : BettiStyle::Compact);
            cx.out << "# " << assumption << "\n# " << convention << "\n";
        }
    });
}

inline void cmd_bounds(const Context& cx, int n, long long h2, bool have_h2) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    auto b = deg_bounds(n);
    FieldDescriptor f = field_for(cx.opt, nullptr);
    if (cx.opt.json) {
        json j = envelope("bounds", f, cx.opt);
        j["n"] = n;
        j["lo"] = b.lo;
        j["hi"] = b.hi;
        j["in_range"] = b.in_range;
        if (have_h2) {
            j["h2"] = h2;
            j["degree"] = deg_from_h2(n, h2);
        }
        print_json(cx.out, j);
        return;
    }
    cx.out << b.lo << " \xE2\x89\xA4 deg \xE2\x89\xA4 " << b.hi << "\n";
    if (!b.in_range) cx.out << "# the bound is only established for 4 <= n <= 15\n";
    if (have_h2) cx.out << "deg = " << deg_from_h2(n, h2) << " for h2 = " << h2 << "\n";
}

inline void cmd_survey(const Context& cx, int a) {
    auto seen = monomial_v_survey(a);
    FieldDescriptor f = field_for(cx.opt, nullptr);
    if (cx.opt.json) {
        json j = envelope("survey", f, cx.opt);
        j["a"] = a;
        j["values"] = json::array();
        for (auto [b, c] : seen) j["values"].push_back({b, c});
        print_json(cx.out, j);
        return;
    }
    bool first = true;
    for (auto [b, c] : seen) {
        cx.out << (first ? "" : " ") << "(" << b << "," << c << ")";
        first = false;
    }
    cx.out << "\n";
}

}  // namespace detail

/// Runs one command line; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Betti tables of Artinian Gorenstein algebras and Calabi-Yau invariants", "gorenstein"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options opt;
    app.add_option("--field", opt.field, "GF(p) or QQ (default: the file's field, else GF(32003))");
    app.add_option("--seed", opt.seed, "seed for every random choice")->capture_default_str();
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_flag("--explain", opt.explain, "show the reasoning behind the result");
    app.add_flag("--wide", opt.wide, "print zero Betti numbers as '--'");

    std::string file, by, family;
    std::vector<std::string> params;
    int t_max = 10, nvars = 0, random_degree = 0, n = 0, a = 0;
    long long h2 = 0;

    auto* tables = app.add_subcommand("tables", "the sixteen Betti tables");
    auto* betti = app.add_subcommand("betti", "Betti table of S/I");
    betti->add_option("file", file, "ideal file (stdin when absent or '-')");
    auto* hf = app.add_subcommand("hf", "Hilbert function and series of S/I");
    hf->add_option("file", file, "ideal file (stdin when absent or '-')");
    hf->add_option("--max", t_max, "last degree listed")->capture_default_str();
    auto* apolar = app.add_subcommand("apolar", "apolar ideal of a form and its Betti table");
    apolar->add_option("file", file, "file with a single form");
    apolar->add_option("--random", random_degree, "use a seeded random form of this degree");
    apolar->add_option("--nvars", nvars, "number of variables for --random");
    auto* construct = app.add_subcommand("construct", "write a named ideal as an ideal file");
    construct->add_option("name", family, "ci, pfaffian7, pfaffian5, gulliksen-negard, huneke-ulrich, type24")
        ->required();
    construct->add_option("params", params, "degree list for ci");
    construct->add_option("--nvars", nvars, "number of variables for ci");
    auto* reduce = app.add_subcommand("reduce", "quotient by generic forms of the given degrees");
    reduce->add_option("file", file, "ideal file (stdin when absent or '-')");
    reduce->add_option("--by", by, "degrees, e.g. 2,2,1 or 1x15")->required();
    auto* classify = app.add_subcommand("classify", "match the Betti table against the sixteen");
    classify->add_option("file", file, "ideal file (stdin when absent or '-')");
    auto* cy = app.add_subcommand("cy", "chi, h11, h12 of a Calabi-Yau threefold");
    cy->add_option("file", file, "ideal file (stdin when absent or '-')");
    auto* bounds = app.add_subcommand("bounds", "degree range in P^n");
    bounds->add_option("n", n, "ambient dimension")->required();
    auto* h2_opt = bounds->add_option("--h2", h2, "also report the degree for this h2");
    auto* survey = app.add_subcommand("survey", "(b, c) over all monomial quadric sets of size a");
    survey->add_option("a", a, "number of quadrics, 1..6")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    detail::Context cx{opt, in, out};
    if (!opt.field.empty()) {
        try {
            FieldDescriptor::parse(opt.field);
        } catch (const FieldError& e) {
            err << "usage error: " << e.what() << "\n";
            return kUsage;
        }
    }
    try {
        if (*tables) detail::cmd_tables(cx);
        else if (*betti) detail::cmd_betti(cx, file);
        else if (*hf) detail::cmd_hf(cx, file, t_max);
        else if (*apolar) detail::cmd_apolar(cx, file, random_degree, nvars);
        else if (*construct) detail::cmd_construct(cx, family, params, nvars);
        else if (*reduce) detail::cmd_reduce(cx, file, by);
        else if (*classify) detail::cmd_classify(cx, file);
        else if (*cy) detail::cmd_cy(cx, file);
        else if (*bounds) detail::cmd_bounds(cx, n, h2, h2_opt->count() > 0);
        else if (*survey) detail::cmd_survey(cx, a);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const GenericityError& e) {
        err << "genericity failure: " << e.what() << "\n";
        return kGenericity;
    } catch (const std::exception& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    }
    return kOk;
}

inline int run(int argc, const char* const* argv, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, in, out, err);
}

}  // namespace gor::cli
