#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lrc/bitmat.hpp"

using namespace lrc;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
    return m;
}

// Exhaustive row-space enumeration; rank = log2(#distinct row combinations).
// Independent of the elimination path under test.
std::size_t oracle_rank(const BitMatrix& m) {
    REQUIRE(m.rows() <= 16);
    REQUIRE(m.cols() <= 32);
    std::vector<std::uint32_t> rows(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) rows[r] |= std::uint32_t(1) << c;
    std::set<std::uint32_t> space;
    for (std::uint32_t mask = 0; mask < (1u << m.rows()); ++mask) {
        std::uint32_t acc = 0;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if ((mask >> r) & 1) acc ^= rows[r];
        space.insert(acc);
    }
    std::size_t lg = 0;
    while ((std::size_t(1) << lg) < space.size()) ++lg;
    REQUIRE((std::size_t(1) << lg) == space.size());
    return lg;
}

std::set<std::uint32_t> oracle_row_space(const BitMatrix& m) {
    std::vector<std::uint32_t> rows(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) rows[r] |= std::uint32_t(1) << c;
    std::set<std::uint32_t> space;
    for (std::uint32_t mask = 0; mask < (1u << m.rows()); ++mask) {
        std::uint32_t acc = 0;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if ((mask >> r) & 1) acc ^= rows[r];
        space.insert(acc);
    }
    return space;
}

// Square submatrix invertibility by subset XOR enumeration: invertible iff
// no nonempty row subset of the selected rows/cols XORs to zero.
bool oracle_invertible(const BitMatrix& m, const std::vector<std::size_t>& rsel,
                       const std::vector<std::size_t>& csel) {
    const std::size_t k = rsel.size();
    std::vector<std::uint32_t> rows(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (m.get(rsel[i], csel[j])) rows[i] |= std::uint32_t(1) << j;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1) acc ^= rows[i];
        if (acc == 0) return false;
    }
    return true;
}

std::size_t oracle_largest_invertible(const BitMatrix& m) {
    const std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = kmax; k >= 1; --k) {
        // all row and column k-subsets
        std::vector<std::size_t> rsel(k), csel(k);
        std::vector<bool> rmask(m.rows(), false), cmask(m.cols(), false);
        std::fill(rmask.begin(), rmask.begin() + k, true);
        do {
            std::size_t ri = 0;
            for (std::size_t r = 0; r < m.rows(); ++r)
                if (rmask[r]) rsel[ri++] = r;
            std::fill(cmask.begin(), cmask.end(), false);
            std::fill(cmask.begin(), cmask.begin() + k, true);
            do {
                std::size_t ci = 0;
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (cmask[c]) csel[ci++] = c;
                if (oracle_invertible(m, rsel, csel)) return k;
            } while (std::prev_permutation(cmask.begin(), cmask.end()));
        } while (std::prev_permutation(rmask.begin(), rmask.end()));
    }
    return 0;
}

}  // namespace

TEST_CASE("rank: identity and duplicate rows") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix::from_rows({"11", "11"})) == 1);
    CHECK(rank(BitMatrix(4, 7)) == 0);
}

TEST_CASE("rank: random 5x8 matches largest invertible square submatrix") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const BitMatrix m = random_matrix(5, 8, rng);
        CHECK(rank(m) == oracle_largest_invertible(m));
    }
}

TEST_CASE("rref: identity and zero") {
    const Rref ri = rref(BitMatrix::identity(4));
    CHECK(ri.r == BitMatrix::identity(4));
    CHECK(ri.pivot_cols == std::vector<std::size_t>{0, 1, 2, 3});

    const Rref rz = rref(BitMatrix(3, 5));
    CHECK(rz.r == BitMatrix(3, 5));
    CHECK(rz.pivot_cols.empty());
}

TEST_CASE("rref: hand-eliminated example with row-space equality") {
    const BitMatrix m = BitMatrix::from_rows({"110", "101"});
    const Rref e = rref(m);
    CHECK(e.r == BitMatrix::from_rows({"101", "011"}));
    CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(oracle_row_space(m) == oracle_row_space(e.r));
}

TEST_CASE("rref: idempotent and row-space preserving on random input") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const BitMatrix m = random_matrix(6, 9, rng);
        const Rref e1 = rref(m);
        const Rref e2 = rref(e1.r);
        CHECK(e1.r == e2.r);
        CHECK(e1.pivot_cols == e2.pivot_cols);
        CHECK(oracle_row_space(m) == oracle_row_space(e1.r));
    }
}

TEST_CASE("nullspace: identity, parity check, random product check") {
    CHECK(nullspace(BitMatrix::identity(4)).rows() == 0);

    const BitMatrix ones = BitMatrix::from_rows({"111"});
    const BitMatrix ns = nullspace(ones);
    REQUIRE(ns.rows() == 2);
    CHECK(ns.cols() == 3);
    for (std::size_t r = 0; r < ns.rows(); ++r) CHECK(ns.row_weight(r) % 2 == 0);
    CHECK(rank(ns) == 2);

    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const BitMatrix m = random_matrix(4, 9, rng);
        const BitMatrix basis = nullspace(m);
        CHECK(basis.rows() == 9 - rank(m));
        CHECK(rank(basis) == basis.rows());
        for (std::size_t r = 0; r < basis.rows(); ++r)
            CHECK(mat_vec(m, basis.row_vec(r)).is_zero());
    }
}

TEST_CASE("rank and nullspace vs exhaustive oracles, bulk random sweep") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 12;
        const BitMatrix m = random_matrix(rows, cols, rng);
        const std::size_t rk = rank(m);
        CHECK(rk == oracle_rank(m));
        const BitMatrix basis = nullspace(m);
        CHECK(basis.rows() + rk == cols);
        for (std::size_t r = 0; r < basis.rows(); ++r)
            CHECK(mat_vec(m, basis.row_vec(r)).is_zero());
    }
}

TEST_CASE("rank equals rank of transpose") {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 200; ++trial) {
        const BitMatrix m = random_matrix(1 + rng() % 10, 1 + rng() % 14, rng);
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("columns_dependent: examples and monotonicity") {
    const BitMatrix eq = BitMatrix::from_rows({"11", "00", "11"});
    const std::size_t both[] = {0, 1};
    CHECK(columns_dependent(eq, both));

    const BitMatrix zero_col = BitMatrix::from_rows({"01", "00"});
    const std::size_t just_zero[] = {0};
    CHECK(columns_dependent(zero_col, just_zero));

    const BitMatrix id5 = BitMatrix::identity(5);
    const std::size_t all5[] = {0, 1, 2, 3, 4};
    CHECK_FALSE(columns_dependent(id5, all5));

    const std::size_t oob[] = {7};
    CHECK_THROWS_AS((void)columns_dependent(id5, oob), std::out_of_range);

    // dependent subset implies every superset dependent
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const BitMatrix m = random_matrix(4, 8, rng);
        std::vector<std::size_t> idx;
        while (idx.size() < 5) {
            const std::size_t c = rng() % 8;
            if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
        }
        const std::vector<std::size_t> sub(idx.begin(), idx.begin() + 3);
        if (columns_dependent(m, sub)) CHECK(columns_dependent(m, idx));
    }
}

TEST_CASE("matmul: identities and hand-XOR example") {
    std::mt19937_64 rng(48);
    const BitMatrix l = random_matrix(4, 6, rng);
    CHECK(matmul(l, BitMatrix::identity(6)) == l);
    CHECK(matmul(BitMatrix::identity(4), l) == l);

    const BitMatrix a = BitMatrix::from_rows({"11", "01"});
    const BitMatrix b = BitMatrix::from_rows({"10", "11"});
    CHECK(matmul(a, b) == BitMatrix::from_rows({"01", "11"}));

    CHECK_THROWS_AS(matmul(a, BitMatrix(3, 2)), std::invalid_argument);
}

TEST_CASE("LRC1 format round trip") {
    const std::string text = "LRC1 2 3\n101\n010\n";
    const BitMatrix m = parse_lrc1(text);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(to_lrc1(m) == text);

    std::mt19937_64 rng(49);
    for (int trial = 0; trial < 50; ++trial) {
        const BitMatrix r = random_matrix(1 + rng() % 9, 1 + rng() % 17, rng);
        CHECK(parse_lrc1(to_lrc1(r)) == r);
    }

    CHECK_THROWS_AS(parse_lrc1("LRC2 1 1\n0\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_lrc1("LRC1 2 2\n00\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_lrc1("LRC1 1 2\n0x\n"), std::runtime_error);
}
