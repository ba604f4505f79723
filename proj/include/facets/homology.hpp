// homology.hpp -- reduced simplicial homology over an exact field.
//
// The chain complex is the reduced one: the empty face spans C_{-1} and the
// map from vertices to it is the augmentation.  With f_k faces of
// cardinality k and r_k the rank of the k-th boundary map, the reduced
// Betti number in dimension k-1 is f_k - r_k - r_{k+1}.  Hence b~_{-1} is 1
// exactly for the complex {emptyset} and 0 otherwise, and the void complex
// has no homology at all.

#pragma once

#include <unordered_map>
#include <unordered_set>

#include "core.hpp"
#include "exact_rank.hpp"

namespace facets {

struct HomologyProfile {
    int dim = -1;              // dimension of the complex
    std::vector<long> tilde;   // tilde[i+1] = b~_i, for i = -1 .. dim

    long reduced_betti(int i) const {
        std::size_t k = static_cast<std::size_t>(i + 1);
        return i >= -1 && k < tilde.size() ? tilde[k] : 0;
    }

    bool all_zero() const {
        for (long b : tilde)
            if (b)
                return false;
        return true;
    }

    // vanishing below the top dimension; this is what Reisner's criterion
    // asks of every link
    bool vanishing_below(int top) const {
        for (int i = -1; i < top; ++i)
            if (reduced_betti(i))
                return false;
        return true;
    }
};

namespace detail {

// all faces, bucketed by cardinality: faces[k] holds the k-subsets
inline std::vector<std::vector<std::uint64_t>> faces_by_card(
    const std::vector<Monomial>& facets) {
    std::unordered_set<std::uint64_t> seen;
    for (Monomial f : facets) {
        std::uint64_t m = f.bits(), s = m;
        while (true) {
            seen.insert(s);
            if (s == 0)
                break;
            s = (s - 1) & m;
        }
    }
    int maxcard = 0;
    for (Monomial f : facets)
        maxcard = std::max(maxcard, f.degree());
    std::vector<std::vector<std::uint64_t>> faces(static_cast<std::size_t>(maxcard) + 1);
    for (std::uint64_t s : seen)
        faces[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    for (auto& level : faces)
        std::sort(level.begin(), level.end());
    return faces;
}

// boundary map from the k-sets into the (k-1)-sets, entries 0/+-1
inline IntMatrix boundary_matrix(const std::vector<std::uint64_t>& lower,
                                 const std::vector<std::uint64_t>& upper) {
    std::unordered_map<std::uint64_t, int> row;
    row.reserve(lower.size());
    for (std::size_t i = 0; i < lower.size(); ++i)
        row[lower[i]] = static_cast<int>(i);
    IntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (std::size_t j = 0; j < upper.size(); ++j) {
        int sign = 1, pos = 0;
        for (std::uint64_t b = upper[j]; b; b &= b - 1, ++pos) {
            std::uint64_t child = upper[j] & ~(b & (~b + 1));
            m.at(row.at(child), static_cast<int>(j)) = sign;
            sign = -sign;
        }
        (void)pos;
    }
    return m;
}

}  // namespace detail

inline HomologyProfile reduced_homology(const SimplicialComplex& dx, const FieldSpec& field) {
    HomologyProfile profile;
    profile.dim = dx.dimension();
    profile.tilde.assign(static_cast<std::size_t>(profile.dim + 2), 0);
    if (dx.is_void())
        return profile;

    // a cone is acyclic: some vertex lies in every facet
    Monomial apex = dx.facets()[0];
    for (Monomial f : dx.facets())
        apex = apex & f;
    if (!apex.is_one())
        return profile;

    auto faces = detail::faces_by_card(dx.facets());
    std::size_t levels = faces.size();  // index = cardinality, 0 .. dim+1
    std::vector<int> rank(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) {
        IntMatrix bd = detail::boundary_matrix(faces[k - 1], faces[k]);
        rank[k] = matrix_rank(bd, field);
    }
    for (std::size_t k = 0; k < levels; ++k)
        profile.tilde[k] = static_cast<long>(faces[k].size()) - rank[k] - rank[k + 1];
    return profile;
}

// link of a face: all faces disjoint from it whose union with it is a face.
// Its facets are the maximal H \ face over the facets H containing the face.
inline SimplicialComplex link(const SimplicialComplex& dx, Monomial face) {
    if (!dx.is_face(face))
        throw PreconditionError("link: not a face of the complex");
    std::vector<Monomial> rest;
    for (Monomial h : dx.facets())
        if (face.divides(h))
            rest.push_back(h.minus(face));
    return SimplicialComplex(dx.ambient(), std::move(rest));
}

}  // namespace facets
