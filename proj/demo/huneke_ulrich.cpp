// The Huneke-Ulrich ideal: Artinian reduction, Betti table, and the Hodge
// numbers of the threefold obtained by cutting down to P^8.

#include <iostream>

#include "gorenstein/gorenstein.hpp"

int main() {
    using namespace gor;
    PrimeField field;
    auto I = build_named(field, NamedFamily{Family::HunekeUlrich, {}, 0, 1});
    std::cout << "generators: " << I.size() << " in " << I.nvars() << " variables\n";

    auto artinian = artinian_reduction(I, std::vector<int>(16, 1), 3);
    auto h = hilbert_series(artinian.ideal);
    std::cout << "h-vector:";
    for (auto v : h.reduced_numerator) std::cout << " " << v;
    std::cout << "  (degree " << h.multiplicity() << ")\n" << render_betti(betti_table(artinian.ideal));

    auto threefold = artinian_reduction(I, std::vector<int>(12, 1), 5);
    auto cy = hodge_h11_h12(threefold.ideal, 7);
    std::cout << "\nthreefold in P^" << cy.ambient << ": chi = " << cy.chi << ", h11 = " << cy.h11
              << ", h12 = " << cy.h12 << " (" << cy.method << ")\n";
    std::cout << "conormal module:\n" << render_betti(cy.conormal, BettiStyle::Wide);
}
