// duality.hpp -- complements, the nonface complex, Alexander duality,
// square-free components.
//
// For an ideal I with facet complex Delta, the nonface complex Delta_N has
// as faces exactly the square-free monomials outside I, and its facets are
// the complements of the minimal vertex covers of Delta.  The dual ideal
// I^v is generated by the minimal covers; applying the construction twice
// returns I.  The zero and unit ideals are each other's duals.

#pragma once

#include "core.hpp"
#include "covers.hpp"

namespace facets {

// Facet-wise complement within the ambient set.  Complements of an
// antichain form an antichain, so this is an involution.
inline SimplicialComplex complement_complex(const SimplicialComplex& dx) {
    std::vector<Monomial> comp;
    comp.reserve(dx.facets().size());
    for (Monomial f : dx.facets())
        comp.push_back(dx.ambient().complement(f));
    return SimplicialComplex(dx.ambient(), std::move(comp));
}

inline MonomialIdeal dual_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        return MonomialIdeal(ideal.ambient(), {Monomial::one()});
    if (ideal.is_unit())
        return MonomialIdeal(ideal.ambient(), {});
    return facet_ideal(cover_complex(facet_complex(ideal)).complex);
}

// View of the nonface complex of an ideal.  Face queries are answered from
// the generators; the facet list (complements of minimal covers) is small
// and computed once, but the face set itself is never materialized.
class NonfaceComplexView {
public:
    explicit NonfaceComplexView(MonomialIdeal ideal)
        : ideal_(std::move(ideal)),
          facets_(ideal_.is_unit()
                      ? std::vector<Monomial>{}
                      : complement_complex(cover_complex(facet_complex(ideal_)).complex)
                            .facets()) {}

    const MonomialIdeal& ideal() const { return ideal_; }
    const VariableSet& ambient() const { return ideal_.ambient(); }

    // S is a face iff the monomial S does not lie in the ideal
    bool is_face(Monomial s) const { return !ideal_.contains(s); }

    const std::vector<Monomial>& facets() const { return facets_; }

    SimplicialComplex as_complex() const {
        return SimplicialComplex(ideal_.ambient(), facets_);
    }

    bool is_void() const { return facets_.empty(); }

    int dimension() const {
        int d = -1;
        for (Monomial f : facets_)
            d = std::max(d, f.degree() - 1);
        return d;
    }

    // The pure i-dimensional subcomplex: all i-faces as facets.  For i = -1
    // this is the complex {emptyset}.
    SimplicialComplex pure_skeleton(int i) const {
        if (i < -1 || i > dimension())
            throw PreconditionError("skeleton dimension out of range");
        std::vector<Monomial> faces;
        for (Monomial f : facets_) {
            // all (i+1)-subsets of f; facets below dimension i contribute none
            std::vector<int> verts = f.indices();
            int k = i + 1, n = static_cast<int>(verts.size());
            if (n < k)
                continue;
            std::vector<int> pick(k);
            for (int j = 0; j < k; ++j)
                pick[j] = j;
            while (true) {
                Monomial m;
                for (int j = 0; j < k; ++j)
                    m = m | Monomial::single(verts[pick[j]]);
                faces.push_back(m);
                int j = k - 1;
                while (j >= 0 && pick[j] == n - k + j)
                    --j;
                if (j < 0)
                    break;
                ++pick[j];
                for (int l = j + 1; l < k; ++l)
                    pick[l] = pick[l - 1] + 1;
            }
        }
        return SimplicialComplex(ideal_.ambient(), std::move(faces));
    }

private:
    MonomialIdeal ideal_;
    std::vector<Monomial> facets_;
};

inline NonfaceComplexView nonface_complex(const MonomialIdeal& ideal) {
    return NonfaceComplexView(ideal);
}

// Alexander dual view: faces are the complements of the nonfaces.  Realized
// as the nonface view of the dual ideal; duals of duals are the original.
inline NonfaceComplexView alexander_dual(const NonfaceComplexView& view) {
    return NonfaceComplexView(dual_ideal(view.ideal()));
}

// Nonface (Stanley-Reisner) ideal of a complex given by facets: the unique
// ideal whose nonface complex is the given one.  Computed through the cover
// complex of the complement.
inline MonomialIdeal nonface_ideal(const SimplicialComplex& dx) {
    return facet_ideal(cover_complex(complement_complex(dx)).complex);
}

// Reference enumeration of the nonface complex's facets for small ambient
// sets: scan every subset, keep the maximal faces.
inline std::vector<Monomial> nonface_facets_bruteforce(const MonomialIdeal& ideal) {
    int n = ideal.ambient().size();
    if (n > 22)
        throw PreconditionError("brute-force nonface enumeration is limited to 22 variables");
    std::vector<Monomial> faces;
    for (std::uint64_t s = 0;; ++s) {
        Monomial m = Monomial::from_bits(s);
        if (!ideal.contains(m))
            faces.push_back(m);
        if (s == ideal.ambient().all().bits())
            break;
    }
    return maximal_elements(std::move(faces));
}

// Reference Alexander dual for small ambient sets: the faces of the dual
// are the complements of the nonfaces of the given view.
inline std::vector<Monomial> alexander_dual_bruteforce(const NonfaceComplexView& view) {
    int n = view.ambient().size();
    if (n > 22)
        throw PreconditionError("brute-force Alexander dual is limited to 22 variables");
    std::vector<Monomial> faces;
    for (std::uint64_t s = 0;; ++s) {
        Monomial m = Monomial::from_bits(s);
        if (!view.is_face(view.ambient().complement(m)))
            faces.push_back(m);
        if (s == view.ambient().all().bits())
            break;
    }
    return maximal_elements(std::move(faces));
}

// The k-th square-free homogeneous component I_[k]: the ideal generated by
// all degree-k square-free monomials lying in I.
inline MonomialIdeal component(const MonomialIdeal& ideal, int k) {
    if (k < 0)
        throw PreconditionError("component degree must be nonnegative");
    int n = ideal.ambient().size();
    std::vector<Monomial> gens;
    if (k <= n)
        detail::for_each_subset_of_size(n, k, [&](Monomial m) {
            if (ideal.contains(m))
                gens.push_back(m);
        });
    return MonomialIdeal(ideal.ambient(), std::move(gens));
}

// All variable covers of the given cardinality, minimal or not.  These are
// exactly the generators of component(dual_ideal(F(dx)), k).
inline std::vector<Monomial> variable_covers_of_size(const SimplicialComplex& dx, int k) {
    std::vector<Monomial> covers;
    detail::for_each_subset_of_size(dx.ambient().size(), k, [&](Monomial c) {
        for (Monomial f : dx.facets())
            if ((f & c).is_one())
                return;
        covers.push_back(c);
    });
    return covers;
}

}  // namespace facets
