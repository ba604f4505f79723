#include <catch2/catch_amalgamated.hpp>

#include "support/helpers.hpp"
#include "support/random_objects.hpp"

using namespace facets;
using testing::complex;
using testing::ideal;
using testing::mono;

TEST_CASE("minimal covers of the running example") {
    SimplicialComplex dx = complex("<xyz, yzu, uv>");
    const VariableSet& v = dx.ambient();

    std::vector<Monomial> expected{mono(v, {"x", "u"}), mono(v, {"y", "u"}),
                                   mono(v, {"y", "v"}), mono(v, {"z", "u"}),
                                   mono(v, {"z", "v"})};
    std::sort(expected.begin(), expected.end());

    REQUIRE(minimal_covers(dx) == expected);
    REQUIRE(covering_number(dx) == 2);
    REQUIRE(is_unmixed(dx));
    REQUIRE(cover_complex(dx).complex == complex("<xu, yu, yv, zu, zv> over x,y,z,u,v"));
}

TEST_CASE("minimal covers of small fixtures") {
    // a simplex is covered by its single vertices
    SimplicialComplex simplex = complex("<xyz>");
    REQUIRE(minimal_covers(simplex) ==
            std::vector<Monomial>{Monomial::single(0), Monomial::single(1), Monomial::single(2)});
    REQUIRE(covering_number(simplex) == 1);

    // mixed complex from the duality example
    SimplicialComplex dx = complex("<xyz, zu>");
    const VariableSet& v = dx.ambient();
    std::vector<Monomial> expected{mono(v, {"x", "u"}), mono(v, {"y", "u"}), mono(v, {"z"})};
    std::sort(expected.begin(), expected.end());
    REQUIRE(minimal_covers(dx) == expected);
    REQUIRE(covering_number(dx) == 1);
    REQUIRE_FALSE(is_unmixed(dx));
}

TEST_CASE("covers of degenerate complexes") {
    // the void complex is covered by the empty set
    SimplicialComplex void_complex = complex("<> over x,y");
    REQUIRE(minimal_covers(void_complex) == std::vector<Monomial>{Monomial::one()});
    REQUIRE(covering_number(void_complex) == 0);
    REQUIRE(is_unmixed(void_complex));

    // {emptyset} cannot be covered at all
    SimplicialComplex irrelevant = complex("<1> over x,y");
    REQUIRE(minimal_covers(irrelevant).empty());
    REQUIRE_THROWS_AS(covering_number(irrelevant), PreconditionError);
    REQUIRE(cover_complex(irrelevant).complex.is_void());
    REQUIRE(cover_complex(irrelevant).covering_number == -1);

    // these two degenerate complexes exchange under the cover operation
    REQUIRE(cover_complex(void_complex).complex == irrelevant);
}

TEST_CASE("cover properties on random complexes") {
    testing::Rng rng(424242);
    for (int trial = 0; trial < 300; ++trial) {
        SimplicialComplex dx = testing::random_complex(rng, testing::pick(rng, 1, 8), 5, 4);
        std::vector<Monomial> covers = minimal_covers(dx);

        REQUIRE(covers == minimal_covers_bruteforce(dx));

        // every cover meets every facet; no cover contains another
        for (Monomial c : covers) {
            for (Monomial f : dx.facets())
                REQUIRE_FALSE((c & f).is_one());
        }
        for (std::size_t a = 0; a < covers.size(); ++a)
            for (std::size_t b = 0; b < covers.size(); ++b)
                if (a != b)
                    REQUIRE_FALSE(covers[a].divides(covers[b]));

        // the covering operation is an involution
        CoverComplex mm = cover_complex(dx);
        REQUIRE(cover_complex(mm.complex).complex == dx);

        // unmixed means the cover complex is pure
        REQUIRE(is_unmixed(dx) == mm.complex.is_pure());
    }
}

TEST_CASE("covering number equals the smallest dual generator degree") {
    testing::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        MonomialIdeal i = testing::random_ideal(rng, testing::pick(rng, 1, 8), 5, 4);
        SimplicialComplex dx = facet_complex(i);
        REQUIRE(covering_number(dx) == dual_ideal(i).min_generator_degree());
    }
}
