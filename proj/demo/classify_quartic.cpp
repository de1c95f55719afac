// Draws seeded random quartics in four variables of varying sparsity and
// reports which of the sixteen Betti tables their apolar algebras land on.

#include <cstdio>
#include <map>
#include <random>

#include "gorenstein/gorenstein.hpp"

int main(int argc, char** argv) {
    using namespace gor;
    using F = PrimeField;
    int samples = argc > 1 ? std::atoi(argv[1]) : 200;
    auto R = make_ring(F{}, 4);
    std::mt19937_64 rng(2026);
    std::map<std::string, int> seen;
    for (int s = 0; s < samples; ++s) {
        std::vector<Polynomial<F>::Term> terms;
        int keep = 1 + rng() % 16;
        for (const auto& m : monomials_of_degree(4, 4))
            if (rng() % keep == 0) terms.push_back({m, R->field().random(rng)});
        auto form = Polynomial<F>::from_terms(R->field(), 4, terms);
        if (form.is_zero()) continue;
        auto T = betti_table(apolar_ideal(R, form));
        auto m = match_table(T);
        ++seen[m ? m->label : "(not codimension 4)"];
    }
    for (const auto& [label, count] : seen) std::printf("%-22s %d\n", label.c_str(), count);
}
