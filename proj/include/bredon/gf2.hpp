#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bredon/errors.hpp"

namespace bredon::gf2 {

// Hard ceilings; elimination on anything larger would thrash rather than
// finish, so oversized inputs are rejected up front.
inline constexpr std::size_t kMaxCols = std::size_t{1} << 19;
inline constexpr std::size_t kMaxRows = std::size_t{1} << 21;
inline constexpr std::uint64_t kMaxMatrixBits = std::uint64_t{1} << 31;

/// Fixed-length vector over GF(2), packed into 64-bit words.
/// Bits beyond size() are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len);
    static BitVector from_indices(std::size_t len, const std::vector<std::size_t>& ones);

    std::size_t size() const { return len_; }
    bool test(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    bool any() const;
    std::size_t count() const;
    /// Index of the lowest set bit, or -1 when zero.
    long lowest_set() const;

    BitVector& operator^=(const BitVector& o);
    friend bool operator==(const BitVector&, const BitVector&) = default;

    /// GF(2) inner product; lengths must agree.
    friend bool dot(const BitVector& a, const BitVector& b);

private:
    std::vector<std::uint64_t> words_;
    std::size_t len_ = 0;
};

/// Row-major matrix over GF(2); every row has length cols().
class BitMatrix {
public:
    explicit BitMatrix(std::size_t ncols = 0);
    void append_row(BitVector row);
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return ncols_; }
    const BitVector& row(std::size_t i) const { return rows_[i]; }

private:
    std::vector<BitVector> rows_;
    std::size_t ncols_ = 0;
};

/// Incremental Gauss-Jordan accumulator, the workhorse behind rank and
/// membership queries. Pivots sit at the lowest set index of each stored
/// row, and each pivot bit is cleared from every other stored row, so a
/// single reduction pass decides membership.
class Echelon {
public:
    explicit Echelon(std::size_t ncols);
    /// Reduces v against the stored rows and keeps it when independent.
    /// Returns true when the rank grew.
    bool insert(BitVector v);
    bool contains(BitVector v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return ncols_; }

private:
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
    std::size_t ncols_;
};

std::size_t rank(const BitMatrix& m);
/// True iff v lies in the row span of m; lengths must agree.
bool in_span(const BitVector& v, const BitMatrix& m);
/// Basis of {x : every row of m is orthogonal to x}. Deterministic: one
/// basis vector per free column of the reduced form, in ascending column
/// order; rows() = cols(m) - rank(m).
BitMatrix kernel_basis(const BitMatrix& m);

}  // namespace bredon::gf2
