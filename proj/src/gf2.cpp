#include "tscc/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace tscc {

std::size_t BinaryVector::popcount() const {
    std::size_t n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
}

bool BinaryVector::dot(const BinaryVector& other) const {
    if (len_ != other.len_) throw std::invalid_argument("BinaryVector::dot: length mismatch");
    uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1u;
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& other) {
    if (len_ != other.len_) throw std::invalid_argument("BinaryVector::operator^=: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::vector<std::size_t> BinaryVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BinaryVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryVector BinaryMatrix::row(std::size_t r) const {
    BinaryVector v(cols_);
    auto src = row_words(r);
    auto dst = v.words();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i];
    return v;
}

void BinaryMatrix::set_row(std::size_t r, const BinaryVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("BinaryMatrix::set_row: length mismatch");
    auto src = v.words();
    auto dst = row_words(r);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i];
}

void BinaryMatrix::append_row(const BinaryVector& v) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = v.size();
        wpr_ = (cols_ + 63) / 64;
        if (wpr_ == 0) wpr_ = 1;
    }
    if (v.size() != cols_) throw std::invalid_argument("BinaryMatrix::append_row: length mismatch");
    data_.resize((rows_ + 1) * wpr_, 0);
    ++rows_;
    set_row(rows_ - 1, v);
}

void BinaryMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    const uint64_t* s = data_.data() + src * wpr_;
    uint64_t* d = data_.data() + dst * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    uint64_t* pa = data_.data() + a * wpr_;
    uint64_t* pb = data_.data() + b * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (uint64_t c : row(r).ones()) t.set(c, r, true);
    }
    return t;
}

namespace gf2 {

namespace {

// Forward elimination sweeping columns left to right. Returns pivot
// (row, col) pairs; the matrix is left in row echelon form.
std::vector<std::pair<std::size_t, std::size_t>> echelonize(BinaryMatrix& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t p = next_row;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, next_row);
        for (std::size_t r = next_row + 1; r < m.rows(); ++r) {
            if (m.get(r, c)) m.xor_row_into(next_row, r);
        }
        pivots.emplace_back(next_row, c);
        ++next_row;
    }
    return pivots;
}

// Full reduced row echelon form.
std::vector<std::pair<std::size_t, std::size_t>> rref(BinaryMatrix& m) {
    auto pivots = echelonize(m);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [pr, pc] = *it;
        for (std::size_t r = 0; r < pr; ++r) {
            if (m.get(r, pc)) m.xor_row_into(pr, r);
        }
    }
    return pivots;
}

}  // namespace

std::size_t rank(BinaryMatrix m) { return echelonize(m).size(); }

std::optional<BinaryVector> solve(const BinaryMatrix& a, const BinaryVector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("gf2::solve: dimension mismatch");
    // Augment with b as an extra column and reduce.
    BinaryMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto src = a.row_words(r);
        auto dst = aug.row_words(r);
        for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i];
        if (b.get(r)) aug.set(r, a.cols(), true);
    }
    auto pivots = rref(aug);
    BinaryVector x(a.cols());
    for (auto [pr, pc] : pivots) {
        if (pc == a.cols()) return std::nullopt;  // row 0...0 | 1
        if (aug.get(pr, a.cols())) x.set(pc, true);
    }
    return x;
}

BinaryMatrix column_submatrix(const BinaryMatrix& m, std::span<const std::size_t> cols) {
    for (std::size_t c : cols) {
        if (c >= m.cols()) throw std::out_of_range("gf2::column_submatrix: column index out of range");
    }
    BinaryMatrix out(m.rows(), cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (m.get(r, cols[j])) out.set(r, j, true);
        }
    }
    return out;
}

std::vector<BinaryVector> nullspace_basis(const BinaryMatrix& m) {
    BinaryMatrix red = m;
    auto pivots = rref(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto [pr, pc] : pivots) is_pivot[pc] = true;

    std::vector<BinaryVector> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        BinaryVector v(m.cols());
        v.set(c, true);
        for (auto [pr, pc] : pivots) {
            if (red.get(pr, c)) v.set(pc, true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RowSpace::RowSpace(const BinaryMatrix& m) : basis_(m) {
    auto pivots = rref(basis_);
    // Drop zero rows: keep only pivot rows at the top.
    BinaryMatrix compact(pivots.size(), m.cols());
    pivots_.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        auto src = basis_.row_words(pivots[i].first);
        auto dst = compact.row_words(i);
        for (std::size_t w = 0; w < src.size(); ++w) dst[w] = src[w];
        pivots_.push_back(pivots[i].second);
    }
    basis_ = std::move(compact);
}

bool RowSpace::reduce(BinaryVector& v) const {
    if (v.size() != basis_.cols()) throw std::invalid_argument("RowSpace::reduce: length mismatch");
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        if (v.get(pivots_[i])) {
            auto src = basis_.row_words(i);
            auto dst = v.words();
            for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
        }
    }
    return !v.any();
}

bool RowSpace::contains(const BinaryVector& v) const {
    BinaryVector copy = v;
    return reduce(copy);
}

}  // namespace gf2

}  // namespace tscc
