#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

// Packed bit vector over GF(2). Index 0 is the first coordinate; all bits at
// positions >= size() are kept zero in the packed words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static BitVec from_string(std::string_view bits);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    BitVec& operator^=(const BitVec& o);

    bool is_zero() const;
    std::size_t weight() const;

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

    std::string to_string() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense row-major matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (c & 63);
        if (v)
            w_[r * wpr_ + (c >> 6)] |= mask;
        else
            w_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    std::span<std::uint64_t> row(std::size_t r) { return {w_.data() + r * wpr_, wpr_}; }
    std::span<const std::uint64_t> row(std::size_t r) const {
        return {w_.data() + r * wpr_, wpr_};
    }

    // dst ^= src, whole rows
    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t r1, std::size_t r2);

    BitVec row_vec(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);
    BitVec col_vec(std::size_t c) const;

    std::size_t row_weight(std::size_t r) const;
    bool row_is_zero(std::size_t r) const;

    BitMatrix transposed() const;

    // Rows [r0, r1) as a new matrix.
    BitMatrix row_slice(std::size_t r0, std::size_t r1) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row-space dimension (= column-space dimension).
std::size_t rank(const BitMatrix& m);

struct Rref {
    BitMatrix r;
    std::vector<std::size_t> pivot_cols;  // ascending
};

// Reduced row echelon form; row space is preserved.
Rref rref(const BitMatrix& m);

// Basis of {x : M x^T = 0} as rows of a (cols - rank) x cols matrix.
BitMatrix nullspace(const BitMatrix& m);

// True iff the selected columns (at most 5) are linearly dependent.
// Enumerates the <= 31 nonempty subset XORs; sits in hot verification loops.
bool columns_dependent(const BitMatrix& m, std::span<const std::size_t> idx);

BitMatrix matmul(const BitMatrix& l, const BitMatrix& r);

// M x for a column vector x (length = cols); result length = rows.
BitVec mat_vec(const BitMatrix& m, const BitVec& x);

// "LRC1" text format: header line `LRC1 <rows> <cols>`, then one line of
// '0'/'1' characters per row, newline-terminated, no trailing whitespace.
std::string to_lrc1(const BitMatrix& m);
void write_lrc1(std::ostream& os, const BitMatrix& m);
BitMatrix read_lrc1(std::istream& is);
BitMatrix parse_lrc1(std::string_view text);

}  // namespace lrc
