// trees.hpp -- leaves, free vertices, simplicial forests, localization.
//
// A facet F is a leaf when its intersection with the vertex set of the rest
// of the complex sits inside a single remaining facet (the joint).  A forest
// is a complex in which EVERY nonempty subcollection of facets has a leaf;
// possessing one global leaf-removal order is strictly weaker, so the forest
// check really does inspect all subcollections.  The verdict always carries
// a replayable witness: a leaf order, or a leafless subcollection.

#pragma once

#include "core.hpp"

namespace facets {

inline SimplicialComplex remove_facet(const SimplicialComplex& dx, Monomial f) {
    if (!dx.has_facet(f))
        throw PreconditionError("remove_facet: not a facet of the complex");
    std::vector<Monomial> rest;
    rest.reserve(dx.facets().size() - 1);
    for (Monomial g : dx.facets())
        if (g != f)
            rest.push_back(g);
    return SimplicialComplex(dx.ambient(), std::move(rest));
}

struct LeafCheck {
    bool leaf = false;
    std::optional<Monomial> joint;  // a facet of Delta \ F containing F's overlap
};

inline LeafCheck is_leaf(const SimplicialComplex& dx, Monomial f) {
    if (!dx.has_facet(f))
        throw PreconditionError("is_leaf: not a facet of the complex");
    if (dx.facet_count() == 1)
        return {true, std::nullopt};
    Monomial rest_vertices;
    for (Monomial g : dx.facets())
        if (g != f)
            rest_vertices = rest_vertices | g;
    Monomial core = f & rest_vertices;
    for (Monomial g : dx.facets())
        if (g != f && core.divides(g))
            return {true, g};
    return {false, std::nullopt};
}

// vertices of f lying in no other facet; every leaf has at least one
inline Monomial free_vertices(const SimplicialComplex& dx, Monomial f) {
    if (!dx.has_facet(f))
        throw PreconditionError("free_vertices: not a facet of the complex");
    Monomial others;
    for (Monomial g : dx.facets())
        if (g != f)
            others = others | g;
    return f.minus(others);
}

namespace detail {

// leaf test inside the subcollection selected by `mask` (bits over `facets`)
inline bool subcollection_has_leaf(const std::vector<Monomial>& facets, std::uint64_t mask) {
    for (std::uint64_t fb = mask; fb; fb &= fb - 1) {
        int fi = std::countr_zero(fb);
        std::uint64_t rest = mask & ~(std::uint64_t{1} << fi);
        if (rest == 0)
            return true;  // sole facet of the subcollection
        Monomial rest_vertices;
        for (std::uint64_t gb = rest; gb; gb &= gb - 1)
            rest_vertices = rest_vertices | facets[std::countr_zero(gb)];
        Monomial core = facets[fi] & rest_vertices;
        for (std::uint64_t gb = rest; gb; gb &= gb - 1)
            if (core.divides(facets[std::countr_zero(gb)]))
                return true;
    }
    return false;
}

}  // namespace detail

// Greedy leaf elimination: repeatedly remove the first leaf in canonical
// order.  Success is necessary but not sufficient for being a forest.
inline std::optional<std::vector<Monomial>> greedy_leaf_order(const SimplicialComplex& dx) {
    std::vector<Monomial> remaining = dx.facets();
    std::vector<Monomial> order;
    while (!remaining.empty()) {
        SimplicialComplex current(dx.ambient(), remaining);
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < remaining.size(); ++i)
            if (is_leaf(current, remaining[i]).leaf) {
                pick = i;
                break;
            }
        if (!pick)
            return std::nullopt;
        order.push_back(remaining[*pick]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*pick));
    }
    return order;
}

struct ForestVerdict {
    bool forest = false;
    std::vector<Monomial> leaf_order;  // filled when forest
    std::vector<Monomial> leafless;    // a leafless subcollection otherwise
};

inline ForestVerdict is_forest(const SimplicialComplex& dx) {
    const auto& facets = dx.facets();
    int q = dx.facet_count();
    if (q == 0)
        return {true, {}, {}};
    if (q > 26)
        throw PreconditionError("forest check is limited to 26 facets");

    // Fast rejection: if greedy elimination strands, the stranded remainder
    // is itself a leafless subcollection.
    {
        std::vector<Monomial> remaining = facets;
        while (!remaining.empty()) {
            SimplicialComplex current(dx.ambient(), remaining);
            std::optional<std::size_t> pick;
            for (std::size_t i = 0; i < remaining.size(); ++i)
                if (is_leaf(current, remaining[i]).leaf) {
                    pick = i;
                    break;
                }
            if (!pick)
                return {false, {}, remaining};
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*pick));
        }
    }

    // Exhaustive confirmation, smallest subcollections first so a failure
    // yields a minimal witness.  Subcollections of size <= 1 trivially have
    // a leaf.
    std::uint64_t bad = 0;
    for (int size = 2; size <= q && !bad; ++size)
        detail::for_each_subset_of_size(q, size, [&](Monomial sel) {
            if (!detail::subcollection_has_leaf(facets, sel.bits())) {
                bad = sel.bits();
                return false;
            }
            return true;
        });
    if (bad) {
        std::vector<Monomial> witness;
        for (std::uint64_t b = bad; b; b &= b - 1)
            witness.push_back(facets[std::countr_zero(b)]);
        return {false, {}, witness};
    }

    ForestVerdict v;
    v.forest = true;
    v.leaf_order = *greedy_leaf_order(dx);  // cannot fail: every subcollection has a leaf
    return v;
}

inline bool is_tree(const SimplicialComplex& dx) {
    if (dx.is_void())
        return false;  // a tree is a connected forest, and connectivity needs a facet
    return is_forest(dx).forest && is_connected(dx);
}

// Localization at the prime generated by the variables OUTSIDE prime_vars:
// delete the other variables from every generator and minimalize.  The
// result lives over the restricted ambient set.  If a generator's support
// is disjoint from prime_vars it becomes 1 and the whole localization is
// the unit ideal.  An empty prime_vars set keeps the original ambient
// (a variable set cannot be empty): the localization at the zero prime is
// the unit ideal unless the ideal was zero.
inline MonomialIdeal localize(const MonomialIdeal& ideal, Monomial prime_vars) {
    if (!prime_vars.divides(ideal.ambient().all()))
        throw PreconditionError("localize: prime variables outside the ambient set");
    if (prime_vars.is_one())
        return MonomialIdeal(ideal.ambient(),
                             ideal.is_zero() ? std::vector<Monomial>{}
                                             : std::vector<Monomial>{Monomial::one()});
    VariableSet sub = ideal.ambient().restrict(prime_vars);
    std::vector<Monomial> gens;
    for (Monomial g : ideal.generators()) {
        Monomial cut = g & prime_vars;
        if (cut.is_one())
            return MonomialIdeal(sub, {Monomial::one()});
        gens.push_back(compress(cut, prime_vars));
    }
    return MonomialIdeal(std::move(sub), std::move(gens));
}

}  // namespace facets
