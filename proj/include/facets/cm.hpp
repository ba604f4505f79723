// cm.hpp -- Krull dimension, Reisner's criterion, pure skeleta, and the
// skeleton test for sequential Cohen-Macaulayness.
//
// R/I is Cohen-Macaulay over k exactly when every link inside the nonface
// complex has vanishing reduced homology below its dimension (Reisner).
// R/I is sequentially Cohen-Macaulay exactly when, for every i from -1 up
// to dim of the nonface complex, the nonface ideal of the pure i-skeleton
// is Cohen-Macaulay (Duval's skeleton criterion).  Both tests are exact and
// field-sensitive.

#pragma once

#include "duality.hpp"
#include "homology.hpp"

namespace facets {

// n - covering number of the facet complex; equals 1 + dim of the nonface
// complex.  Both are computed and compared, as an internal cross-check.
inline int krull_dimension(const MonomialIdeal& ideal) {
    if (ideal.is_unit())
        throw PreconditionError("Krull dimension of the zero ring is not defined here");
    int n = ideal.ambient().size();
    int alpha = ideal.is_zero() ? 0 : covering_number(facet_complex(ideal));
    int via_cover = n - alpha;
    int via_nonface = 1 + NonfaceComplexView(ideal).dimension();
    if (via_cover != via_nonface)
        throw std::logic_error("krull_dimension: cover and nonface computations disagree");
    return via_cover;
}

inline bool is_cohen_macaulay(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (ideal.is_unit())
        throw PreconditionError("Cohen-Macaulayness of the zero ring is not defined here");
    if (ideal.is_zero())
        return true;  // the ring itself
    NonfaceComplexView view(ideal);
    SimplicialComplex nonface = view.as_complex();

    auto faces = detail::faces_by_card(nonface.facets());
    for (const auto& level : faces)
        for (std::uint64_t fbits : level) {
            Monomial face = Monomial::from_bits(fbits);
            SimplicialComplex lk = link(nonface, face);
            if (!reduced_homology(lk, field).vanishing_below(lk.dimension()))
                return false;
        }
    return true;
}

// Nonface ideal of the pure i-dimensional subcomplex of the nonface
// complex.  i = -1 yields the ideal of all ambient variables (the skeleton
// is {emptyset}), whose quotient is the field.
inline MonomialIdeal pure_skeleton_ideal(const MonomialIdeal& ideal, int i) {
    if (ideal.is_unit())
        throw PreconditionError("the unit ideal has no skeleton ideals");
    return nonface_ideal(NonfaceComplexView(ideal).pure_skeleton(i));
}

struct SkeletonReport {
    int dim;
    MonomialIdeal ideal;
    bool cohen_macaulay;
};

struct SequentialCmReport {
    bool sequentially_cm = false;
    std::vector<SkeletonReport> skeleta;
};

inline SequentialCmReport is_sequentially_cm(const MonomialIdeal& ideal,
                                             const FieldSpec& field) {
    if (ideal.is_unit())
        throw PreconditionError("sequential CM of the zero ring is not defined here");
    NonfaceComplexView view(ideal);
    SequentialCmReport report;
    report.sequentially_cm = true;
    for (int i = -1; i <= view.dimension(); ++i) {
        MonomialIdeal skel = nonface_ideal(view.pure_skeleton(i));
        bool cm = is_cohen_macaulay(skel, field);
        report.sequentially_cm = report.sequentially_cm && cm;
        report.skeleta.push_back({i, std::move(skel), cm});
    }
    return report;
}

}  // namespace facets
