#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

// d <= n - k - ceil(k/r) + 2
std::int64_t singleton_like(std::int64_t n, std::int64_t k, std::int64_t r);

enum class MinBranch { log2, rational };

// Largest integer k with k <= rn/(r+1) - min{log2(1 + rn/2), rn/((r+1)(r+2))}.
// Exact integer/rational arithmetic throughout; requires (r+1) | n.
// `preconditions` reports the bound's validity context (d >= 5 implied by the
// caller, 2 <= r <= n/2 - 2 checked here).
std::int64_t rate_bound_k(std::uint64_t n, std::uint64_t r, MinBranch* branch = nullptr,
                          bool* preconditions = nullptr);

struct BoundReport {
    std::uint64_t n = 0;
    std::int64_t k = 0;
    std::uint64_t r = 0;
    std::int64_t singleton_like_d_max = 0;
    std::int64_t rate_bound_k_max = 0;
    MinBranch min_branch = MinBranch::log2;
    bool k_optimal = false;
    bool d_optimal_singleton = false;  // certified d >= 6 meets Eq-style bound with equality
    bool preconditions_met = false;
};

BoundReport bound_report(std::uint64_t n, std::int64_t k, std::uint64_t r);

struct EllRange {
    std::int64_t lo_exclusive = 0;  // floor of the exact rational bound
    std::int64_t hi_inclusive = 0;
    std::uint64_t lo_num = 0, lo_den = 0;  // exact rational lower bound
    std::string constraint_note;           // which z constraint applied, if any
};

// Admissible group counts for k-optimal sub-family constructions.
EllRange ell_range(unsigned b, unsigned s, unsigned m, SpreadKind kind);

struct Lemma6Report {
    bool pass = false;
    int condition = 0;                        // violated condition 1..3, 0 on pass
    std::array<std::size_t, 2> blocks{};      // offending block indices
    std::vector<std::uint64_t> columns;       // offending global column positions
    std::uint64_t tests = 0;                  // logical XOR tests covered
};

// Distance certificate: within-block pair and quadruple conditions plus the
// cross-block pair condition; a pass certifies d >= 6 together with the
// all-even-weight parity from the locality rows.
Lemma6Report check_lemma6(const LrcCode& code, unsigned threads = 1);

struct LocalityReport {
    bool pass = false;
    std::uint64_t r = 0;
    std::string detail;
};

// Locality rows must have disjoint supports covering every coordinate;
// returns max group width minus one.
LocalityReport verify_locality(const LrcCode& code);

// Enumerates all 2^k - 1 codewords; guarded to k <= 24.
std::uint64_t exact_min_distance(const LrcCode& code);

struct OptimalityReport {
    BoundReport bounds;
    std::uint64_t computed_k = 0;
    bool rank_full = false;
    bool ell_in_range = false;
    std::vector<std::string> notes;
};

OptimalityReport optimality_report(const LrcCode& code);

}  // namespace lrc
