#pragma once

// Dense vectors and matrices over the field with two elements.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fukflow {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector unit(std::size_t n, std::size_t i) {
        BitVector v(n);
        v.set(i);
        return v;
    }

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b = true) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }
    bool operator<(const BitVector& o) const;

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;
    // SIZE_MAX when empty
    std::size_t first() const;
    std::size_t last() const;
    std::vector<std::size_t> support() const;
    bool dot(const BitVector& o) const;

    std::string to_string() const;  // "0110..."

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool b = true) { rows_[r].set(c, b); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    BitVector column(std::size_t c) const;

    BitMatrix operator*(const BitMatrix& o) const;
    BitVector operator*(const BitVector& v) const;
    BitMatrix& operator+=(const BitMatrix& o);
    bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    BitMatrix transpose() const;
    std::size_t rank() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

// Row space basis in echelon form with pivots on the lowest set bit.
// Used for membership tests and kernel computations.
class RowSpace {
public:
    explicit RowSpace(std::size_t n) : n_(n) {}
    // returns false when v was already in the span
    bool insert(BitVector v);
    bool contains(BitVector v) const;
    BitVector reduce(BitVector v) const;
    std::size_t dim() const { return rows_.size(); }

private:
    std::size_t n_;
    std::vector<BitVector> rows_;
};

// Basis of {x : M x = 0}.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

}  // namespace fukflow
