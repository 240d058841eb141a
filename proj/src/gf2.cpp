#include "bredon/gf2.hpp"

#include <bit>
#include <string>

namespace bredon::gf2 {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }
}  // namespace

BitVector::BitVector(std::size_t len) : words_(word_count(len), 0), len_(len) {
    if (len > kMaxCols) {
        throw ResourceLimit("BitVector length " + std::to_string(len) + " exceeds cap " +
                            std::to_string(kMaxCols));
    }
}

BitVector BitVector::from_indices(std::size_t len, const std::vector<std::size_t>& ones) {
    BitVector v(len);
    for (std::size_t i : ones) v.set(i);
    return v;
}

bool BitVector::test(std::size_t i) const {
    if (i >= len_) throw InvalidInput("BitVector index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= len_) throw InvalidInput("BitVector index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

bool BitVector::any() const {
    for (std::uint64_t w : words_) {
        if (w) return true;
    }
    return false;
}

std::size_t BitVector::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

long BitVector::lowest_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i]) {
            return static_cast<long>(i * kWordBits +
                                     static_cast<std::size_t>(std::countr_zero(words_[i])));
        }
    }
    return -1;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw InvalidInput("BitVector xor: dimension mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool dot(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) throw InvalidInput("BitVector dot: dimension mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) acc ^= a.words_[i] & b.words_[i];
    return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(std::size_t ncols) : ncols_(ncols) {
    if (ncols > kMaxCols) {
        throw ResourceLimit("BitMatrix with " + std::to_string(ncols) + " columns exceeds cap " +
                            std::to_string(kMaxCols));
    }
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != ncols_) throw InvalidInput("BitMatrix row length mismatch");
    if (rows_.size() + 1 > kMaxRows) {
        throw ResourceLimit("BitMatrix row count exceeds cap " + std::to_string(kMaxRows));
    }
    const std::uint64_t bits = static_cast<std::uint64_t>(rows_.size() + 1) * ncols_;
    if (bits > kMaxMatrixBits) {
        throw ResourceLimit("BitMatrix of " + std::to_string(bits) + " bits exceeds budget");
    }
    rows_.push_back(std::move(row));
}

Echelon::Echelon(std::size_t ncols) : ncols_(ncols) {
    if (ncols > kMaxCols) {
        throw ResourceLimit("Echelon with " + std::to_string(ncols) + " columns exceeds cap");
    }
}

bool Echelon::insert(BitVector v) {
    if (v.size() != ncols_) throw InvalidInput("Echelon insert: dimension mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.test(pivots_[i])) v ^= rows_[i];
    }
    const long p = v.lowest_set();
    if (p < 0) return false;
    // Keep pivot columns exclusive to their row.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].test(static_cast<std::size_t>(p))) rows_[i] ^= v;
    }
    pivots_.push_back(static_cast<std::size_t>(p));
    rows_.push_back(std::move(v));
    if (rows_.size() > kMaxRows) throw ResourceLimit("Echelon rank exceeds row cap");
    return true;
}

bool Echelon::contains(BitVector v) const {
    if (v.size() != ncols_) throw InvalidInput("Echelon contains: dimension mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.test(pivots_[i])) v ^= rows_[i];
    }
    return !v.any();
}

std::size_t rank(const BitMatrix& m) {
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    return e.rank();
}

bool in_span(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.cols()) throw InvalidInput("in_span: dimension mismatch");
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    return e.contains(v);
}

BitMatrix kernel_basis(const BitMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<BitVector> work;
    work.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) work.push_back(m.row(i));

    // Gauss-Jordan with lowest-index pivots: pivot_cols[i] is the pivot
    // column of work[i] after the sweep.
    std::vector<std::size_t> pivot_cols;
    std::size_t next = 0;
    for (std::size_t c = 0; c < n && next < work.size(); ++c) {
        std::size_t hit = work.size();
        for (std::size_t i = next; i < work.size(); ++i) {
            if (work[i].test(c)) {
                hit = i;
                break;
            }
        }
        if (hit == work.size()) continue;
        std::swap(work[hit], work[next]);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i != next && work[i].test(c)) work[i] ^= work[next];
        }
        pivot_cols.push_back(c);
        ++next;
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    BitMatrix basis(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(n);
        v.set(f);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            if (work[i].test(f)) v.set(pivot_cols[i]);
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

}  // namespace bredon::gf2
