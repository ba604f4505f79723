// betti.hpp -- graded Betti numbers of R/I, linear resolutions, and the
// Cohen-Macaulay/linear-resolution duality check.
//
// betti_table computes beta_{i,j}(R/I) by Hochster's formula: sum over the
// size-j vertex subsets W of the reduced homology of the nonface complex
// restricted to W, in dimension j-i-1.  taylor_betti recomputes the same
// numbers from the Taylor complex of the generators, a completely separate
// route used as a brute-force cross-check.

#pragma once

#include <map>

#include "cm.hpp"

namespace facets {

struct BettiTable {
    std::map<std::pair<int, int>, long> entries;  // (homological degree i, internal degree j)

    long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    void add(int i, int j, long v) {
        if (v)
            entries[{i, j}] += v;
    }

    bool operator==(const BettiTable& o) const { return entries == o.entries; }

    // projective dimension: largest i with a nonzero entry
    int max_homological_degree() const {
        int d = 0;
        for (const auto& [key, v] : entries)
            if (v)
                d = std::max(d, key.first);
        return d;
    }
};

inline BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field) {
    BettiTable table;
    if (ideal.is_unit())
        return table;  // R/I = 0 has an empty resolution
    if (ideal.ambient().size() > 24)
        throw PreconditionError("Betti tables are limited to 24 variables");
    NonfaceComplexView view(ideal);
    std::vector<Monomial> facets = view.facets();
    std::uint64_t full = ideal.ambient().all().bits();
    for (std::uint64_t w = 0;; ++w) {
        Monomial sub = Monomial::from_bits(w);
        std::vector<Monomial> restricted;
        restricted.reserve(facets.size());
        for (Monomial f : facets)
            restricted.push_back(f & sub);
        SimplicialComplex rx(ideal.ambient(), std::move(restricted));
        HomologyProfile h = reduced_homology(rx, field);
        int j = sub.degree();
        for (int d = -1; d <= h.dim; ++d)
            if (long b = h.reduced_betti(d)) {
                int i = j - d - 1;
                if (i == 0 && j > 0)
                    throw std::logic_error("betti_table: unexpected top homology on a nonface");
                table.add(i, j, b);
            }
        if (w == full)
            break;
    }
    return table;
}

// Brute-force reference: Betti numbers from the Taylor complex.  For each
// square-free multidegree m, the subsets of generators with lcm m form a
// complex whose differential keeps only lcm-preserving deletions; its
// homology in homological degree i contributes to beta_{i,|m|}(R/I).
inline BettiTable taylor_betti(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (ideal.is_unit())
        return {};
    int q = ideal.generator_count();
    if (q > 16)
        throw PreconditionError("Taylor-complex computation is limited to 16 generators");
    const auto& gens = ideal.generators();

    // subsets of generators bucketed by their lcm
    std::map<std::uint64_t, std::vector<std::uint64_t>> strata;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << q); ++s) {
        Monomial lcm;
        for (std::uint64_t b = s; b; b &= b - 1)
            lcm = lcm | gens[std::countr_zero(b)];
        strata[lcm.bits()].push_back(s);
    }

    BettiTable table;
    for (auto& [lcm_bits, subsets] : strata) {
        std::sort(subsets.begin(), subsets.end(), [](std::uint64_t a, std::uint64_t b) {
            return std::make_pair(std::popcount(a), a) < std::make_pair(std::popcount(b), b);
        });
        int maxcard = std::popcount(subsets.back());
        std::vector<std::vector<std::uint64_t>> level(static_cast<std::size_t>(maxcard) + 1);
        for (std::uint64_t s : subsets)
            level[static_cast<std::size_t>(std::popcount(s))].push_back(s);

        auto lcm_of = [&](std::uint64_t s) {
            Monomial m;
            for (std::uint64_t b = s; b; b &= b - 1)
                m = m | gens[std::countr_zero(b)];
            return m.bits();
        };

        std::vector<int> rank(level.size() + 1, 0);
        for (std::size_t k = 1; k < level.size(); ++k) {
            std::unordered_map<std::uint64_t, int> row;
            for (std::size_t i = 0; i < level[k - 1].size(); ++i)
                row[level[k - 1][i]] = static_cast<int>(i);
            IntMatrix m(static_cast<int>(level[k - 1].size()),
                        static_cast<int>(level[k].size()));
            for (std::size_t j = 0; j < level[k].size(); ++j) {
                int sign = 1;
                for (std::uint64_t b = level[k][j]; b; b &= b - 1) {
                    std::uint64_t child = level[k][j] & ~(b & (~b + 1));
                    if (lcm_of(child) == lcm_bits)  // survives the tensor with k
                        m.at(row.at(child), static_cast<int>(j)) = sign;
                    sign = -sign;
                }
            }
            rank[k] = matrix_rank(m, field);
        }
        int j = std::popcount(lcm_bits);
        for (std::size_t k = 0; k < level.size(); ++k) {
            long b = static_cast<long>(level[k].size()) - rank[k] - rank[k + 1];
            if (b)
                table.add(static_cast<int>(k), j, b);
        }
    }
    return table;
}

// I has a linear resolution when it is generated in one degree d and all
// higher syzygies of R/I live in the forced degrees: beta_{i,j} = 0 unless
// j = i + d - 1 (for i >= 1).  Mixed generator degrees count as "no".
inline bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field) {
    if (ideal.is_zero())
        throw PreconditionError("the zero ideal has no resolution to test");
    std::optional<int> d = ideal.equigenerated_degree();
    if (!d)
        return false;
    BettiTable table = betti_table(ideal, field);
    for (const auto& [key, v] : table.entries) {
        auto [i, j] = key;
        if (v && i >= 1 && j != i + *d - 1)
            return false;
    }
    return true;
}

// Cohen-Macaulayness of R/I and linearity of the dual's resolution are
// equivalent; compute both sides independently, insist they agree, and
// return the shared verdict.
inline bool eagon_reiner_check(const MonomialIdeal& ideal, const FieldSpec& field) {
    bool cm = is_cohen_macaulay(ideal, field);
    bool linear = has_linear_resolution(dual_ideal(ideal), field);
    if (cm != linear)
        throw std::logic_error("eagon_reiner_check: the two duality routes disagree");
    return cm;
}

}  // namespace facets
