#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/bitmat.hpp"

namespace lrc {

// t-dimensional subspace of V_m, basis vectors stored as the columns of an
// m x t matrix of full column rank.
struct Subspace {
    unsigned m = 0, t = 0;
    BitMatrix basis;
};

enum class SpreadKind { full, partial };

std::string to_string(SpreadKind k);

struct SpreadFamily {
    unsigned m = 0, t = 0;
    unsigned z = 0;  // m mod t; 0 for full spreads
    SpreadKind kind = SpreadKind::full;
    std::vector<Subspace> members;
};

std::uint64_t full_spread_size(unsigned m, unsigned t);     // (2^m-1)/(2^t-1)
std::uint64_t partial_spread_size(unsigned m, unsigned t);  // (2^m - 2^t(2^z-1) - 1)/(2^t-1)

// Desarguesian spread: W_i = alpha^(i-1) * GF(2^t) embedded in GF(2^m),
// basis {alpha^(i-1) gamma^j : 0 <= j < t} with gamma = alpha^ell. Members
// partition the nonzero vectors. Requires t | m.
SpreadFamily full_spread(unsigned m, unsigned t);

// Partial spread for t not dividing m, built by the lifted multiplication-map
// recursion; emits exactly partial_spread_size(m, t) members. Delegates to
// full_spread when t | m.
SpreadFamily partial_spread(unsigned m, unsigned t);

struct FamilyReport {
    bool pass = false;
    std::string detail;
    // offending pair of member indices (i < j), or (i, i) for a bad single member
    std::optional<std::pair<std::size_t, std::size_t>> offending;
};

// Checks every member has rank t and every pair meets in {0}; for full
// spreads also checks the coverage count ell*(2^t-1) = 2^m-1.
FamilyReport verify_family(const SpreadFamily& f, unsigned threads = 1);

// Block-diagonal generator of the intersection subspace M_i = W_i (+) U,
// with G_U fixed to the s x s identity.
struct DirectSumGen {
    unsigned s = 0;
    BitMatrix matrix;  // (s+m) x (s+t)
};

DirectSumGen assemble_gm(unsigned s, const Subspace& w);

}  // namespace lrc
