#include "lrc/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lrc {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitVec::from_string: invalid character");
    }
    return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVec xor: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::is_zero() const {
    for (std::uint64_t x : w_)
        if (x) return false;
    return true;
}

std::size_t BitVec::weight() const {
    std::size_t n = 0;
    for (std::uint64_t x : w_) n += std::popcount(x);
    return n;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (rows[r][c] == '1')
                m.set(r, c, true);
            else if (rows[r][c] != '0')
                throw std::invalid_argument("BitMatrix::from_rows: invalid character");
        }
    }
    return m;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    std::uint64_t* d = w_.data() + dst * wpr_;
    const std::uint64_t* s = w_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    std::swap_ranges(w_.begin() + r1 * wpr_, w_.begin() + (r1 + 1) * wpr_,
                     w_.begin() + r2 * wpr_);
}

BitVec BitMatrix::row_vec(std::size_t r) const {
    BitVec v(cols_);
    std::copy_n(w_.data() + r * wpr_, wpr_, v.words().data());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    std::copy_n(v.words().data(), wpr_, w_.data() + r * wpr_);
}

BitVec BitMatrix::col_vec(std::size_t c) const {
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    std::size_t n = 0;
    const std::uint64_t* p = w_.data() + r * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) n += std::popcount(p[i]);
    return n;
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    const std::uint64_t* p = w_.data() + r * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i)
        if (p[i]) return false;
    return true;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* p = w_.data() + r * wpr_;
        for (std::size_t wi = 0; wi < wpr_; ++wi) {
            std::uint64_t word = p[wi];
            while (word) {
                const unsigned bi = std::countr_zero(word);
                word &= word - 1;
                t.set(wi * 64 + bi, r, true);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::row_slice(std::size_t r0, std::size_t r1) const {
    BitMatrix out(r1 - r0, cols_);
    std::copy_n(w_.data() + r0 * wpr_, (r1 - r0) * wpr_, out.w_.data());
    return out;
}

namespace {

// Gaussian elimination to (optionally reduced) echelon form, in place.
std::vector<std::size_t> eliminate(BitMatrix& m, bool reduced) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t pivot = next_row;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(pivot, next_row);
        for (std::size_t r = reduced ? 0 : next_row + 1; r < m.rows(); ++r) {
            if (r != next_row && m.get(r, c)) m.xor_row_into(next_row, r);
        }
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    BitMatrix tmp = m;
    return eliminate(tmp, false).size();
}

Rref rref(const BitMatrix& m) {
    Rref out;
    out.r = m;
    out.pivot_cols = eliminate(out.r, true);
    return out;
}

BitMatrix nullspace(const BitMatrix& m) {
    const Rref e = rref(m);
    const std::size_t rk = e.pivot_cols.size();
    const std::size_t n = m.cols();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    BitMatrix basis(n - rk, n);
    std::size_t bi = 0;
    for (std::size_t free_c = 0; free_c < n; ++free_c) {
        if (is_pivot[free_c]) continue;
        basis.set(bi, free_c, true);
        // pivot variable at row j solves to the free column's entry in R
        for (std::size_t j = 0; j < rk; ++j)
            if (e.r.get(j, free_c)) basis.set(bi, e.pivot_cols[j], true);
        ++bi;
    }
    return basis;
}

bool columns_dependent(const BitMatrix& m, std::span<const std::size_t> idx) {
    if (idx.size() > 5)
        throw std::invalid_argument("columns_dependent: more than 5 columns");
    for (std::size_t c : idx)
        if (c >= m.cols()) throw std::out_of_range("columns_dependent: column index");

    std::vector<BitVec> cols;
    cols.reserve(idx.size());
    for (std::size_t c : idx) cols.push_back(m.col_vec(c));

    const unsigned k = static_cast<unsigned>(cols.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        BitVec acc(m.rows());
        for (unsigned j = 0; j < k; ++j)
            if (mask & (1u << j)) acc ^= cols[j];
        if (acc.is_zero()) return true;
    }
    return false;
}

BitMatrix matmul(const BitMatrix& l, const BitMatrix& r) {
    if (l.cols() != r.rows()) throw std::invalid_argument("matmul: shape mismatch");
    BitMatrix out(l.rows(), r.cols());
    for (std::size_t i = 0; i < l.rows(); ++i) {
        auto lrow = l.row(i);
        auto orow = out.row(i);
        for (std::size_t wi = 0; wi < l.words_per_row(); ++wi) {
            std::uint64_t word = lrow[wi];
            while (word) {
                const unsigned bi = std::countr_zero(word);
                word &= word - 1;
                auto rrow = r.row(wi * 64 + bi);
                for (std::size_t wj = 0; wj < out.words_per_row(); ++wj) orow[wj] ^= rrow[wj];
            }
        }
    }
    return out;
}

BitVec mat_vec(const BitMatrix& m, const BitVec& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("mat_vec: shape mismatch");
    BitVec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        auto xw = x.words();
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < row.size(); ++i) acc ^= row[i] & xw[i];
        out.set(r, std::popcount(acc) & 1u);
    }
    return out;
}

std::string to_lrc1(const BitMatrix& m) {
    std::ostringstream os;
    write_lrc1(os, m);
    return os.str();
}

void write_lrc1(std::ostream& os, const BitMatrix& m) {
    os << "LRC1 " << m.rows() << ' ' << m.cols() << '\n';
    std::string line(m.cols(), '0');
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) line[c] = m.get(r, c) ? '1' : '0';
        os << line << '\n';
    }
}

BitMatrix read_lrc1(std::istream& is) {
    std::string magic;
    std::size_t rows = 0, cols = 0;
    if (!(is >> magic >> rows >> cols) || magic != "LRC1")
        throw std::runtime_error("LRC1: bad header");
    std::string line;
    std::getline(is, line);  // rest of header line
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(is, line)) throw std::runtime_error("LRC1: truncated");
        if (line.size() != cols) throw std::runtime_error("LRC1: bad row length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (line[c] == '1')
                m.set(r, c, true);
            else if (line[c] != '0')
                throw std::runtime_error("LRC1: invalid character");
        }
    }
    return m;
}

BitMatrix parse_lrc1(std::string_view text) {
    std::istringstream is{std::string(text)};
    return read_lrc1(is);
}

}  // namespace lrc
