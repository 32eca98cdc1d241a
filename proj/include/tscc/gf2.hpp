#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tscc {

// Dense bit-packed vector over GF(2). Padding bits past len() are kept zero.
class BinaryVector {
public:
    BinaryVector() = default;
    explicit BinaryVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    bool any() const {
        for (uint64_t w : words_) {
            if (w) return true;
        }
        return false;
    }

    std::size_t popcount() const;

    // Parity of the AND with another vector of the same length.
    bool dot(const BinaryVector& other) const;

    BinaryVector& operator^=(const BinaryVector& other);
    friend BinaryVector operator^(BinaryVector a, const BinaryVector& b) {
        a ^= b;
        return a;
    }
    bool operator==(const BinaryVector& other) const = default;

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    std::vector<std::size_t> ones() const;
    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<uint64_t> words_;
};

// Dense bit-packed matrix over GF(2), row-major.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols),
          // nonzero stride even for zero columns, so row spans stay valid
          wpr_(cols == 0 ? 1 : (cols + 63) / 64),
          data_(rows * wpr_, 0) {}

    static BinaryMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t mask = uint64_t(1) << (c & 63);
        if (v) {
            data_[r * wpr_ + (c >> 6)] |= mask;
        } else {
            data_[r * wpr_ + (c >> 6)] &= ~mask;
        }
    }

    std::span<const uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * wpr_, wpr_};
    }
    std::span<uint64_t> row_words(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }

    BinaryVector row(std::size_t r) const;
    void set_row(std::size_t r, const BinaryVector& v);
    void append_row(const BinaryVector& v);

    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    BinaryMatrix transpose() const;

    bool operator==(const BinaryMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 1;
    std::vector<uint64_t> data_;
};

namespace gf2 {

std::size_t rank(BinaryMatrix m);

// Solves a*x = b. Pivots lowest column index first, free variables set to 0,
// so the returned solution is deterministic. Empty optional if inconsistent.
std::optional<BinaryVector> solve(const BinaryMatrix& a, const BinaryVector& b);

// Restriction of m to the given columns, preserving row order and the listed
// column order. Out-of-range column index throws.
BinaryMatrix column_submatrix(const BinaryMatrix& m, std::span<const std::size_t> cols);

std::vector<BinaryVector> nullspace_basis(const BinaryMatrix& m);

// Row space of a matrix in reduced echelon form, for repeated membership and
// reduction queries.
class RowSpace {
public:
    RowSpace() = default;
    explicit RowSpace(const BinaryMatrix& m);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return basis_.cols(); }

    // Reduces v against the basis in place; returns true if v reduced to zero
    // (i.e. v was in the row space).
    bool reduce(BinaryVector& v) const;
    bool contains(const BinaryVector& v) const;

private:
    BinaryMatrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace gf2

}  // namespace tscc
