#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrc/desired.hpp"

using namespace lrc;

namespace {

// Exhaustive minimum distance of the code with parity check A, by walking
// all nonzero words of the nullspace basis. Independent of verify_desired.
std::size_t oracle_min_distance(const BitMatrix& a) {
    const BitMatrix gen = nullspace(a);
    REQUIRE(gen.rows() <= 20);
    std::size_t best = a.cols() + 1;
    for (std::uint32_t mask = 1; mask < (1u << gen.rows()); ++mask) {
        BitVec acc(a.cols());
        for (std::size_t r = 0; r < gen.rows(); ++r)
            if ((mask >> r) & 1) acc ^= gen.row_vec(r);
        best = std::min(best, acc.weight());
    }
    return best;
}

BitMatrix random_invertible(unsigned dim, std::mt19937_64& rng) {
    for (;;) {
        BitMatrix t(dim, dim);
        for (unsigned r = 0; r < dim; ++r)
            for (unsigned c = 0; c < dim; ++c) t.set(r, c, rng() & 1);
        if (rank(t) == dim) return t;
    }
}

}  // namespace

TEST_CASE("all stored fixtures pass verification") {
    for (auto [b, s] : fixture_keys()) {
        CAPTURE(b);
        CAPTURE(s);
        REQUIRE(has_fixture(b, s));
        const DesiredMatrix d = fixture(b, s);
        CHECK(d.a.rows() == 2 * b);
        CHECK(d.a.cols() == (std::uint64_t(1) << b));
        CHECK(verify_desired(d.a, d.s, d.t).pass);
        CHECK(fixture_checksum(b, s) != 0);
    }
    CHECK_FALSE(has_fixture(3, 1));
    CHECK_THROWS_AS(fixture(3, 1), std::invalid_argument);
}

TEST_CASE("fixture blocks split as documented") {
    const DesiredMatrix d = fixture(3, 2);
    CHECK(d.a1().rows() == 2);
    CHECK(d.a2().rows() == 4);
    CHECK(d.a1().cols() == 8);
    // the (3,2) fixture's top block starts with an identity pair
    CHECK(d.a1().get(0, 0));
    CHECK(d.a1().get(1, 1));
}

TEST_CASE("verify_desired flags each violation kind") {
    const DesiredMatrix d = fixture(3, 2);

    BitMatrix dup = d.a;
    for (unsigned r = 0; r < 6; ++r) dup.set(r, 3, dup.get(r, 2));  // equal columns
    const DesiredReport rep = verify_desired(dup, 2, 4);
    CHECK_FALSE(rep.pass);
    CHECK(rep.violation == "pairwise");

    BitMatrix short_rank(6, 8);  // zero matrix: rank fails first
    CHECK(verify_desired(short_rank, 2, 4).violation == "rank");

    // equal only in the bottom block: pairwise violation with columns reported
    BitMatrix bottom_dup = d.a;
    for (unsigned r = 2; r < 6; ++r) bottom_dup.set(r, 5, bottom_dup.get(r, 4));
    const DesiredReport rep2 = verify_desired(bottom_dup, 2, 4);
    CHECK_FALSE(rep2.pass);
    CHECK(rep2.violation == "pairwise");
    REQUIRE(rep2.columns.size() == 2);
    CHECK(rep2.columns[0] == 4);
    CHECK(rep2.columns[1] == 5);

    CHECK_THROWS_AS(verify_desired(d.a, 3, 4), std::invalid_argument);
}

TEST_CASE("t < 3 skips the four-column condition") {
    // 2x2 identity: valid pattern for t=2, s=0 even though columns 0,1 plus
    // any two others would be dependent in a wider matrix
    const BitMatrix id = BitMatrix::identity(2);
    CHECK(verify_desired(id, 0, 2).pass);
}

TEST_CASE("desired matrix is the parity check of a distance >= 5 code") {
    // exhaustive cross-check of the 4-wise certificate on the small fixtures
    const DesiredMatrix d32 = fixture(3, 2);
    CHECK(oracle_min_distance(d32.a) >= 5);
    const DesiredMatrix d43 = fixture(4, 3);
    CHECK(oracle_min_distance(d43.a) >= 5);
}

TEST_CASE("cyclic_seed(3): n, minimal polynomial, quadruple independence") {
    const CyclicSeed cs = cyclic_seed(3);
    CHECK(cs.n == 9);
    CHECK(cs.min_poly == Poly2::from_coeff_bits(0b1001001));  // x^6+x^3+1
    CHECK(cs.min_poly.to_string() == "x^6+x^3+1");
    CHECK(cs.generator == (Poly2::x() + Poly2::one()) * cs.min_poly);
    CHECK(cs.generator.degree() == 7);
    CHECK(cs.aprime.rows() == 6);
    CHECK(cs.aprime.cols() == 8);

    // exhaustive C(8,4) = 70 subset check via columns_dependent
    std::size_t quads = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
            for (std::size_t k = j + 1; k < 8; ++k)
                for (std::size_t l = k + 1; l < 8; ++l) {
                    const std::size_t idx[] = {i, j, k, l};
                    CHECK_FALSE(columns_dependent(cs.aprime, idx));
                    ++quads;
                }
    CHECK(quads == 70);
}

TEST_CASE("cyclic_seed(4): n = 17 and degree-8 minimal polynomial") {
    const CyclicSeed cs = cyclic_seed(4);
    CHECK(cs.n == 17);
    CHECK(cs.min_poly.degree() == 8);
    CHECK(cs.aprime.rows() == 8);
    CHECK(cs.aprime.cols() == 16);
    CHECK(cyclic_seed(5).aprime.cols() == 32);
    CHECK_THROWS_AS(cyclic_seed(2), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_seed(8), std::invalid_argument);
}

TEST_CASE("search_desired finds matrices and respects the budget") {
    const auto found = search_desired(3, 2, 7, 64);
    REQUIRE(found.has_value());
    CHECK(found->s == 2);
    CHECK(found->t == 4);
    CHECK(found->r == 8);
    CHECK(verify_desired(found->a, 2, 4).pass);

    CHECK_FALSE(search_desired(3, 2, 7, 0).has_value());

    // deterministic replay
    const auto again = search_desired(3, 2, 7, 64);
    REQUIRE(again.has_value());
    CHECK(again->a == found->a);

    const auto other_split = search_desired(3, 1, 11, 64);
    REQUIRE(other_split.has_value());
    CHECK(verify_desired(other_split->a, 1, 5).pass);

    // s = 0: the whole matrix is the bottom block
    const auto s0 = search_desired(3, 0, 5, 4);
    REQUIRE(s0.has_value());
    CHECK(verify_desired(s0->a, 0, 6).pass);

    CHECK_THROWS_AS(search_desired(3, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("row transformation invariance of rank and 4-wise conditions") {
    const DesiredMatrix d = fixture(3, 2);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const BitMatrix t = random_invertible(6, rng);
        const BitMatrix ta = matmul(t, d.a);
        CHECK(rank(ta) == 6);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i + 1; j < 8; ++j)
                for (std::size_t k = j + 1; k < 8; ++k)
                    for (std::size_t l = k + 1; l < 8; ++l) {
                        const std::size_t idx[] = {i, j, k, l};
                        CHECK_FALSE(columns_dependent(ta, idx));
                    }
    }
}
