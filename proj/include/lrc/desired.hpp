#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/bitmat.hpp"
#include "lrc/field.hpp"

namespace lrc {

// Column-pattern matrix of a repair group: full row rank, bottom-block
// columns pairwise independent, and (for t >= 3) every 4 columns independent,
// i.e. the parity check of an [r, r-(s+t), >=5] binary code.
struct DesiredMatrix {
    unsigned s = 0, t = 0;   // row split, s + t rows total
    std::uint64_t r = 0;     // columns (= 2^b)
    BitMatrix a;             // (s+t) x r

    BitMatrix a1() const { return a.row_slice(0, s); }
    BitMatrix a2() const { return a.row_slice(s, s + t); }
};

struct DesiredReport {
    bool pass = false;
    std::string violation;              // "rank" | "pairwise" | "fourwise" | ""
    std::vector<std::size_t> columns;   // first violating column set
};

DesiredReport verify_desired(const BitMatrix& a, unsigned s, unsigned t);

// Cyclic-code seed: length n = 2^b + 1, generator (x+1) M(x) where M is the
// minimal polynomial of an order-n root of unity; dropping one check bit
// leaves a 2b x 2^b matrix whose every 4 columns are independent.
struct CyclicSeed {
    unsigned b = 0;
    std::uint64_t n = 0;     // 2^b + 1
    Poly2 min_poly;          // degree 2b
    Poly2 generator;         // (x+1) * min_poly
    BitMatrix aprime;        // 2b x 2^b, column j = expansion of root^j
};

CyclicSeed cyclic_seed(unsigned b);  // 3 <= b <= 7

// Seeded randomized search: row-transform and column-permute the cyclic seed
// until the (s, t) split passes verify_desired. Deterministic per seed; the
// first accepting attempt index wins. Returns nothing after `budget` attempts.
std::optional<DesiredMatrix> search_desired(unsigned b, unsigned s, std::uint64_t seed,
                                            std::uint64_t budget);

bool has_fixture(unsigned b, unsigned s);
DesiredMatrix fixture(unsigned b, unsigned s);  // re-verified at load
std::vector<std::pair<unsigned, unsigned>> fixture_keys();
std::uint64_t fixture_checksum(unsigned b, unsigned s);  // FNV-1a of the row text

}  // namespace lrc
