// Walks one ideal around the duality square: facet complex, minimal covers,
// dual ideal, nonface complex, Alexander dual, and back.

#include <iostream>

#include <facets/facets.hpp>

using namespace facets;

int main() {
    MonomialIdeal ideal = as_ideal(parse_object("(xyz, zu)"));
    std::cout << "ideal I = " << format(ideal) << "\n\n";

    SimplicialComplex fc = facet_complex(ideal);
    std::cout << "facet complex     " << format(fc) << "\n";

    CoverComplex mm = cover_complex(fc);
    std::cout << "cover complex     " << format(mm.complex) << "  (covering number "
              << mm.covering_number << ")\n";

    MonomialIdeal dual = dual_ideal(ideal);
    std::cout << "dual ideal        " << format(dual) << "\n";

    NonfaceComplexView nf(ideal);
    std::cout << "nonface complex   " << format(nf.as_complex()) << "\n";
    std::cout << "alexander dual    " << format(complement_complex(fc)) << "\n\n";

    std::cout << "round trips:\n";
    std::cout << "  dual of the dual ideal  = " << format(dual_ideal(dual)) << "\n";
    std::cout << "  covers of the covers    = " << format(cover_complex(mm.complex).complex)
              << "\n\n";

    std::cout << "squarefree components of the dual:\n";
    for (int k = 1; k <= dual.ambient().size(); ++k) {
        MonomialIdeal comp = component(dual, k);
        if (!comp.is_zero())
            std::cout << "  degree " << k << ": " << format(comp) << "\n";
    }
    return 0;
}
