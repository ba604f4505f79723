// core.hpp -- square-free monomials, simplicial complexes, monomial ideals.
//
// A square-free monomial over an ordered variable set is just its support,
// stored as a 64-bit mask (variable i <-> bit i).  A simplicial complex is
// an ambient variable set plus the antichain of its facets; a square-free
// monomial ideal is an ambient variable set plus the antichain of its
// minimal generators.  Both are kept in a canonical sorted order so that
// equality is structural and printed output is byte-stable.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace facets {

// Malformed user input (text or JSON).  The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (facet complex of the unit
// ideal, out-of-range skeleton index, ...).  CLI exit code 3.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Monomial

class Monomial {
public:
    static constexpr int max_variables = 64;

    constexpr Monomial() = default;  // the monomial 1 (empty support)

    static constexpr Monomial one() { return Monomial{}; }

    static constexpr Monomial from_bits(std::uint64_t bits) {
        Monomial m;
        m.bits_ = bits;
        return m;
    }

    static Monomial single(int var) { return from_bits(std::uint64_t{1} << var); }

    constexpr std::uint64_t bits() const { return bits_; }
    int degree() const { return std::popcount(bits_); }
    bool is_one() const { return bits_ == 0; }

    bool contains_var(int var) const { return (bits_ >> var) & 1u; }

    // divisibility == support inclusion
    bool divides(Monomial m) const { return (bits_ & m.bits_) == bits_; }

    // this / gcd(this, m): drop the variables shared with m
    Monomial minus(Monomial m) const { return from_bits(bits_ & ~m.bits_); }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(degree()));
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr Monomial operator|(Monomial a, Monomial b) {
        return from_bits(a.bits_ | b.bits_);
    }
    friend constexpr Monomial operator&(Monomial a, Monomial b) {
        return from_bits(a.bits_ & b.bits_);
    }
    friend constexpr bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(Monomial a, Monomial b) { return a.bits_ != b.bits_; }

    // Canonical order: supports as ascending index sequences, compared
    // lexicographically.  This is NOT numeric comparison of the masks:
    // {y} > {x,z} because the sequence [0,2] precedes [1].
    friend bool operator<(Monomial a, Monomial b) {
        std::uint64_t x = a.bits_, y = b.bits_;
        while (x && y) {
            int ix = std::countr_zero(x), iy = std::countr_zero(y);
            if (ix != iy)
                return ix < iy;
            x &= x - 1;
            y &= y - 1;
        }
        return y != 0;  // a proper prefix is smaller; equal is not less
    }

private:
    std::uint64_t bits_ = 0;
};

// Re-index m's support relative to the support of mask (which must contain
// it).  Used when an ambient set is restricted to a subset of variables.
inline Monomial compress(Monomial m, Monomial mask) {
    std::uint64_t out = 0;
    int next = 0;
    for (std::uint64_t b = mask.bits(); b; b &= b - 1, ++next)
        if (m.bits() & (b & -b))
            out |= std::uint64_t{1} << next;
    return Monomial::from_bits(out);
}

// ---------------------------------------------------------------------------
// VariableSet

class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw ParseError("variable set must contain at least one variable");
        if (names_.size() > Monomial::max_variables)
            throw ParseError("at most 64 variables are supported");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw ParseError("empty variable name");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw ParseError("duplicate variable '" + names_[i] + "'");
        }
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return static_cast<int>(i);
        return std::nullopt;
    }

    // full support x_1...x_n
    Monomial all() const {
        return Monomial::from_bits(size() == 64 ? ~std::uint64_t{0}
                                                : (std::uint64_t{1} << size()) - 1);
    }

    Monomial complement(Monomial m) const { return all().minus(m); }

    // Sub-variable-set keeping only the variables in `keep`, original order.
    VariableSet restrict(Monomial keep) const {
        std::vector<std::string> sub;
        for (int i : keep.indices())
            sub.push_back(names_[static_cast<std::size_t>(i)]);
        return VariableSet(std::move(sub));
    }

    bool operator==(const VariableSet& o) const { return names_ == o.names_; }
    bool operator!=(const VariableSet& o) const { return names_ != o.names_; }

private:
    std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// antichain normalization

// Inclusion-minimal elements, deduplicated, in canonical order.  For a list
// of ideal generators this is exactly "remove the redundant ones".
inline std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    for (Monomial m : ms) {
        bool redundant = false;
        for (Monomial o : ms)
            if (o != m && o.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(m);
    }
    return out;
}

// Inclusion-maximal elements; the facets of the complex generated by `ms`.
inline std::vector<Monomial> maximal_elements(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    for (Monomial m : ms) {
        bool covered = false;
        for (Monomial o : ms)
            if (o != m && m.divides(o)) {
                covered = true;
                break;
            }
        if (!covered)
            out.push_back(m);
    }
    return out;
}

namespace detail {

inline void check_supports(const VariableSet& vars, const std::vector<Monomial>& ms) {
    for (Monomial m : ms)
        if (!m.divides(vars.all()))
            throw PreconditionError("monomial support lies outside the ambient variable set");
}

// All size-k subsets of an n-bit universe in ascending mask order (Gosper's
// hack).  The callback may return void, or false to stop early.
template <typename Fn>
inline void for_each_subset_of_size(int n, int k, Fn&& fn) {
    auto call = [&](std::uint64_t s) {
        if constexpr (std::is_void_v<decltype(fn(Monomial::one()))>) {
            fn(Monomial::from_bits(s));
            return true;
        } else {
            return fn(Monomial::from_bits(s));
        }
    };
    if (k < 0 || k > n)
        return;
    if (k == 0) {
        call(0);
        return;
    }
    std::uint64_t s = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    while (true) {
        if (!call(s))
            return;
        std::uint64_t c = s & (~s + 1), r = s + c;  // Gosper: next same-popcount mask
        if (r < s || r > limit)
            return;  // the moved block left the universe
        s = (((r ^ s) >> 2) / c) | r;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// SimplicialComplex

// Facet description of a simplicial complex.  <> (no facets) is the void
// complex; <1> (single empty facet) is the empty complex {emptyset}.  The
// vertex set (union of facets) may be a proper subset of the ambient set.
class SimplicialComplex {
public:
    SimplicialComplex(VariableSet ambient, std::vector<Monomial> faces)
        : ambient_(std::move(ambient)), facets_(maximal_elements(std::move(faces))) {
        detail::check_supports(ambient_, facets_);
    }

    const VariableSet& ambient() const { return ambient_; }
    const std::vector<Monomial>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const {  // the complex {emptyset}
        return facets_.size() == 1 && facets_[0].is_one();
    }

    // -1 for both the void complex and {emptyset}
    int dimension() const {
        int d = -1;
        for (Monomial f : facets_)
            d = std::max(d, f.degree() - 1);
        return d;
    }

    bool is_pure() const {
        for (Monomial f : facets_)
            if (f.degree() - 1 != dimension())
                return false;
        return true;
    }

    Monomial vertex_support() const {
        Monomial u;
        for (Monomial f : facets_)
            u = u | f;
        return u;
    }

    bool has_facet(Monomial f) const {
        return std::find(facets_.begin(), facets_.end(), f) != facets_.end();
    }

    bool is_face(Monomial f) const {
        for (Monomial g : facets_)
            if (f.divides(g))
                return true;
        return false;
    }

    bool operator==(const SimplicialComplex& o) const {
        return ambient_ == o.ambient_ && facets_ == o.facets_;
    }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

private:
    VariableSet ambient_;
    std::vector<Monomial> facets_;
};

// ---------------------------------------------------------------------------
// MonomialIdeal

// Square-free monomial ideal, stored by its minimal generators.  () is the
// zero ideal; (1) is the unit ideal.
class MonomialIdeal {
public:
    MonomialIdeal(VariableSet ambient, std::vector<Monomial> gens)
        : ambient_(std::move(ambient)), gens_(minimalize(std::move(gens))) {
        detail::check_supports(ambient_, gens_);
    }

    const VariableSet& ambient() const { return ambient_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    // membership of a square-free monomial
    bool contains(Monomial m) const {
        for (Monomial g : gens_)
            if (g.divides(m))
                return true;
        return false;
    }

    // generator degree when all minimal generators share one, else nullopt;
    // the unit ideal is equigenerated in degree 0
    std::optional<int> equigenerated_degree() const {
        if (gens_.empty())
            return std::nullopt;
        int d = gens_[0].degree();
        for (Monomial g : gens_)
            if (g.degree() != d)
                return std::nullopt;
        return d;
    }

    std::optional<int> min_generator_degree() const {
        std::optional<int> d;
        for (Monomial g : gens_)
            if (!d || g.degree() < *d)
                d = g.degree();
        return d;
    }

    bool operator==(const MonomialIdeal& o) const {
        return ambient_ == o.ambient_ && gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

private:
    VariableSet ambient_;
    std::vector<Monomial> gens_;
};

// ---------------------------------------------------------------------------
// the facet-ideal dictionary

// F(Delta): generators are the facets.  Faithful: facets form an antichain,
// so no minimalization happens.
inline MonomialIdeal facet_ideal(const SimplicialComplex& dx) {
    return MonomialIdeal(dx.ambient(), dx.facets());
}

// delta_F(I): facets are the minimal generators.  The unit ideal has the
// empty monomial as its generator, which is not the support of any facet
// of a complex with the usual conventions, so it is rejected.
inline SimplicialComplex facet_complex(const MonomialIdeal& ideal) {
    if (ideal.is_unit())
        throw PreconditionError("the unit ideal has no facet complex");
    return SimplicialComplex(ideal.ambient(), ideal.generators());
}

// Connectivity of the facet graph: facets are adjacent when they share a
// vertex.  Defined only for complexes with at least one facet.
inline bool is_connected(const SimplicialComplex& dx) {
    if (dx.is_void())
        throw PreconditionError("connectivity is undefined for the void complex");
    const auto& fs = dx.facets();
    std::vector<char> seen(fs.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < fs.size(); ++j)
            if (!seen[j] && !(fs[i] & fs[j]).is_one()) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
    }
    // Facets that are empty (only possible in {emptyset}) have no neighbors;
    // a single facet is always connected.
    return reached == fs.size();
}

}  // namespace facets
