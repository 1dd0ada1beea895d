#include "fukflow/f2.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace fukflow {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

BitVector& BitVector::operator^=(const BitVector& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVector::operator<(const BitVector& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return w_ < o.w_;
}

bool BitVector::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::size_t BitVector::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return npos;
}

std::size_t BitVector::last() const {
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i]) return i * 64 + 63 - std::countl_zero(w_[i]);
    return npos;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s.push_back(i);
    return s;
}

bool BitVector::dot(const BitVector& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c & 1u;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (get(r, c)) v.set(r);
    return v;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    BitMatrix out(rows(), o.cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(r, k)) out.rows_[r] ^= o.rows_[k];
    return out;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (rows_[r].dot(v)) out.set(r);
    return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& o) {
    for (std::size_t r = 0; r < rows(); ++r) rows_[r] ^= o.rows_[r];
    return *this;
}

bool BitMatrix::is_zero() const {
    return std::none_of(rows_.begin(), rows_.end(), [](const BitVector& v) { return v.any(); });
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

std::size_t BitMatrix::rank() const {
    RowSpace rs(cols_);
    for (const auto& r : rows_) rs.insert(r);
    return rs.dim();
}

BitVector RowSpace::reduce(BitVector v) const {
    for (const auto& r : rows_)
        if (v.get(r.first())) v ^= r;
    return v;
}

bool RowSpace::insert(BitVector v) {
    v = reduce(v);
    if (v.none()) return false;
    const std::size_t p = v.first();
    auto it = std::find_if(rows_.begin(), rows_.end(), [p](const BitVector& r) { return r.first() > p; });
    rows_.insert(it, std::move(v));
    return true;
}

bool RowSpace::contains(BitVector v) const { return reduce(std::move(v)).none(); }

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<BitVector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    std::vector<std::size_t> pivot_of_row;
    std::vector<bool> is_pivot(n, false);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() && !rows[sel].get(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(c)) rows[r] ^= rows[rank];
        pivot_of_row.push_back(c);
        is_pivot[c] = true;
        ++rank;
    }
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(n);
        v.set(f);
        for (std::size_t r = 0; r < rank; ++r)
            if (rows[r].get(f)) v.set(pivot_of_row[r]);
        basis.push_back(v);
    }
    return basis;
}

}  // namespace fukflow
