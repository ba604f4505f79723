// covers.hpp -- minimal vertex covers, covering number, the cover complex.
//
// A cover of a complex is a set of variables meeting every facet.  Minimal
// covers are enumerated by branch and bound: pick an uncovered facet, branch
// on its vertices, and forbid already-tried vertices in later branches so no
// cover is produced twice.  Every inclusion-minimal cover is reached this
// way; a final antichain filter removes the non-minimal leftovers.
//
// Degenerate corners are kept total so that the cover-complex involution
// holds everywhere: the void complex has the single minimal cover {} and
// the complex {emptyset} has no covers at all.

#pragma once

#include "core.hpp"

namespace facets {

// Vertex scope restricts covers to the vertex set of the complex, variable
// scope allows all ambient variables.  Inclusion-minimal covers never use a
// non-vertex, so the two scopes enumerate the same minimal covers; the
// parameter exists so callers can say which universe they mean.
enum class CoverScope { vertex, variable };

namespace detail {

inline void cover_search(const std::vector<Monomial>& facets, Monomial current,
                         Monomial forbidden, std::vector<Monomial>& out) {
    const Monomial* uncovered = nullptr;
    for (const Monomial& f : facets)
        if ((f & current).is_one()) {
            uncovered = &f;
            break;
        }
    if (!uncovered) {
        out.push_back(current);
        return;
    }
    Monomial local = forbidden;
    for (int v : uncovered->minus(forbidden).indices()) {
        cover_search(facets, current | Monomial::single(v), local, out);
        local = local | Monomial::single(v);
    }
}

inline std::vector<Monomial> minimal_filter(std::vector<Monomial> covers) {
    std::sort(covers.begin(), covers.end(),
              [](Monomial a, Monomial b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (Monomial c : covers) {
        bool minimal = true;
        for (Monomial o : out)
            if (o.divides(c)) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

inline std::vector<Monomial> minimal_covers(const SimplicialComplex& dx,
                                            CoverScope = CoverScope::vertex) {
    if (dx.is_void())
        return {Monomial::one()};
    for (Monomial f : dx.facets())
        if (f.is_one())
            return {};  // nothing can meet the empty facet
    std::vector<Monomial> found;
    detail::cover_search(dx.facets(), Monomial::one(), Monomial::one(), found);
    return detail::minimal_filter(std::move(found));
}

// Independent reference implementation: scan all subsets of the universe.
// Exponential in the variable count; used by tests and by --oracle runs.
inline std::vector<Monomial> minimal_covers_bruteforce(const SimplicialComplex& dx,
                                                       CoverScope scope = CoverScope::vertex) {
    Monomial universe =
        scope == CoverScope::vertex ? dx.vertex_support() : dx.ambient().all();
    if (universe.degree() > 22)
        throw PreconditionError("brute-force cover scan is limited to 22 variables");
    if (dx.is_void())
        return {Monomial::one()};
    std::vector<Monomial> covers;
    std::uint64_t u = universe.bits();
    // iterate all submasks of u, including 0
    std::uint64_t s = 0;
    while (true) {
        Monomial c = Monomial::from_bits(s);
        bool ok = true;
        for (Monomial f : dx.facets())
            if ((f & c).is_one()) {
                ok = false;
                break;
            }
        if (ok)
            covers.push_back(c);
        if (s == u)
            break;
        s = (s - u) & u;  // next submask
    }
    return detail::minimal_filter(std::move(covers));
}

inline int covering_number(const SimplicialComplex& dx) {
    std::vector<Monomial> covers = minimal_covers(dx);
    if (covers.empty())
        throw PreconditionError("no vertex cover exists (the empty set is a facet)");
    int alpha = covers[0].degree();
    for (Monomial c : covers)
        alpha = std::min(alpha, c.degree());
    return alpha;
}

inline bool is_unmixed(const SimplicialComplex& dx) {
    std::vector<Monomial> covers = minimal_covers(dx);
    for (Monomial c : covers)
        if (c.degree() != covers[0].degree())
            return false;
    return true;
}

// Delta_M together with its covering number.  Applying it twice returns the
// original complex.
struct CoverComplex {
    SimplicialComplex complex;
    int covering_number;  // -1 when there are no covers ({emptyset} input)
};

inline CoverComplex cover_complex(const SimplicialComplex& dx) {
    std::vector<Monomial> covers = minimal_covers(dx);
    int alpha = -1;
    for (Monomial c : covers)
        alpha = alpha < 0 ? c.degree() : std::min(alpha, c.degree());
    return CoverComplex{SimplicialComplex(dx.ambient(), std::move(covers)), alpha};
}

}  // namespace facets
