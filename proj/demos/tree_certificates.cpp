// Shows the certificate chain for a small tree: leaf order, Cohen-Macaulay
// verdict, quotient order for the dual, and the induced shelling.

#include <iostream>

#include <facets/facets.hpp>

using namespace facets;

int main() {
    SimplicialComplex dx = as_complex(parse_object("<xyz, yzu, uv>"));
    std::cout << "complex " << format(dx) << "\n\n";

    ForestVerdict fv = is_forest(dx);
    std::cout << "forest: " << (fv.forest ? "yes" : "no") << "\n";
    if (fv.forest)
        std::cout << "leaf order: " << format_monomial_list(fv.leaf_order, dx.ambient()) << "\n";
    std::cout << "tree: " << (is_tree(dx) ? "yes" : "no") << "\n\n";

    MonomialIdeal ideal = facet_ideal(dx);
    std::cout << "facet ideal " << format(ideal) << "\n";
    std::cout << "unmixed: " << (is_unmixed(dx) ? "yes" : "no") << "\n";
    std::cout << "cohen-macaulay over Q: "
              << (is_cohen_macaulay(ideal, FieldSpec::rationals()) ? "yes" : "no") << "\n\n";

    MonomialIdeal dual = dual_ideal(ideal);
    std::cout << "dual ideal " << format(dual) << "\n";
    if (auto cert = find_linear_quotient_order(dual)) {
        std::cout << "quotient order: " << format_monomial_list(cert->order, dual.ambient())
                  << "\n";
        std::cout << "replay: " << (replay_quotient_certificate(dual, *cert) ? "ok" : "FAILED")
                  << "\n";
    }

    ShellingCertificate sh = shelling_from_quotients(ideal);
    std::cout << "shelling of the nonface complex: "
              << format_monomial_list(sh.facet_order, ideal.ambient()) << "\n";
    return 0;
}
