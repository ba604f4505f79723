// exact_rank.hpp -- exact matrix rank over Q or GF(p).
//
// All matrices that arise here have small integer entries (boundary maps
// are 0/+-1).  Over the rationals the rank is computed by fraction-free
// Bareiss elimination: intermediate entries are minors of the input, so the
// arithmetic stays integral.  A checked 64-bit pass handles almost every
// matrix; on overflow the elimination is redone with arbitrary-precision
// integers.  Over GF(p) a plain modular elimination is used.

#pragma once

#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "field.hpp"

namespace facets {

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

namespace detail {

struct Overflow {};

// 64-bit integer that throws on overflow; lets the Bareiss template run
// fast and fall back to big integers only when needed.
struct CheckedInt {
    long long v = 0;
    CheckedInt() = default;
    CheckedInt(long long x) : v(x) {}
    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r))
            throw Overflow{};
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r))
            throw Overflow{};
        return r;
    }
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) {  // exact by construction
        if (b.v == -1 && a.v == std::numeric_limits<long long>::min())
            throw Overflow{};
        return a.v / b.v;
    }
    bool zero() const { return v == 0; }
};

inline bool entry_zero(const CheckedInt& x) { return x.zero(); }
inline bool entry_zero(const boost::multiprecision::cpp_int& x) { return x.is_zero(); }

template <typename T>
int bareiss_rank(const IntMatrix& m) {
    int rows = m.rows, cols = m.cols;
    std::vector<T> a(m.a.begin(), m.a.end());
    auto at = [&](int r, int c) -> T& { return a[static_cast<std::size_t>(r) * cols + c]; };

    int rank = 0;
    T prev = T(1);
    while (rank < rows && rank < cols) {
        int pr = -1, pc = -1;
        for (int i = rank; i < rows && pr < 0; ++i)
            for (int j = rank; j < cols; ++j)
                if (!entry_zero(at(i, j))) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0)
            break;
        if (pr != rank)
            for (int j = 0; j < cols; ++j)
                std::swap(at(rank, j), at(pr, j));
        if (pc != rank)
            for (int i = 0; i < rows; ++i)
                std::swap(at(i, rank), at(i, pc));
        // Sylvester's identity keeps the division exact
        for (int i = rank + 1; i < rows; ++i)
            for (int j = rank + 1; j < cols; ++j)
                at(i, j) = (at(rank, rank) * at(i, j) - at(i, rank) * at(rank, j)) / prev;
        prev = at(rank, rank);
        ++rank;
    }
    return rank;
}

inline int rank_mod_p(const IntMatrix& m, std::uint32_t p) {
    int rows = m.rows, cols = m.cols;
    std::vector<std::uint64_t> a(m.a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        long long v = m.a[i] % static_cast<long long>(p);
        a[i] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
    }
    auto at = [&](int r, int c) -> std::uint64_t& {
        return a[static_cast<std::size_t>(r) * cols + c];
    };
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j)
                std::swap(at(rank, j), at(pivot, j));
        std::uint64_t pv = at(rank, col);
        for (int i = rank + 1; i < rows; ++i) {
            std::uint64_t f = at(i, col);
            if (f == 0)
                continue;
            // row_i := pv * row_i - f * row_rank  (rank-preserving, no inverse)
            for (int j = col; j < cols; ++j)
                at(i, j) = (at(i, j) * pv + (p - f) % p * at(rank, j)) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline int matrix_rank(const IntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0)
        return 0;
    if (!field.is_rationals())
        return detail::rank_mod_p(m, field.prime());
    try {
        return detail::bareiss_rank<detail::CheckedInt>(m);
    } catch (const detail::Overflow&) {
        return detail::bareiss_rank<boost::multiprecision::cpp_int>(m);
    }
}

}  // namespace facets
