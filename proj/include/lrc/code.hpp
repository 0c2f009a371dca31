#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lrc/bitmat.hpp"
#include "lrc/desired.hpp"
#include "lrc/spread.hpp"

namespace lrc {

struct LrcParams {
    unsigned b = 0, s = 0, t = 0, m = 0, z = 0;
    SpreadKind kind = SpreadKind::full;
    std::uint64_t r = 0;    // locality target 2^b
    std::uint64_t ell = 0;  // repair groups
    std::uint64_t n = 0;    // (r+1) * ell for unshortened codes
    std::int64_t k = 0;     // n - s - ell - m
};

// Pure parameter arithmetic, no matrices built. ell_take = 0 means the whole
// spread; a smaller value takes a sub-family.
LrcParams expected_params(unsigned b, unsigned s, unsigned m, SpreadKind kind,
                          std::uint64_t ell_take = 0);

struct LrcCode {
    LrcParams params;
    BitMatrix h;  // (groups + s + m) x n
    // column ranges per group: group g spans [group_offset[g], group_offset[g+1])
    std::vector<std::uint64_t> group_offset;
    std::uint64_t rank_h = 0;  // verified by construction / load
    std::vector<std::string> warnings;

    std::size_t groups() const { return group_offset.size() - 1; }
    std::uint64_t n() const { return group_offset.back(); }
    std::int64_t dimension() const { return std::int64_t(n()) - std::int64_t(rank_h); }
    std::size_t group_of(std::uint64_t col) const;
};

// Construction: locality rows stacked over the blocks [0 | G_{M_i} A].
// m >= 4b is advisory (warning when violated); the distance certificate does
// not depend on it.
LrcCode construct(unsigned b, unsigned s, unsigned m, SpreadKind kind, const DesiredMatrix& a,
                  std::uint64_t ell_take = 0);

// Delete the first `a` locality rows plus the columns in their supports.
LrcCode shorten_groups(const LrcCode& code, std::uint64_t a);

// Rebuild with tau groups narrowed by one desired-matrix column (the same
// column index across all narrowed groups). Drops locality to r-1 only when
// tau = ell.
LrcCode shorten_columns(unsigned b, unsigned s, unsigned m, SpreadKind kind,
                        const DesiredMatrix& a, std::uint64_t tau, std::uint64_t ell_take = 0);

// Code file: `key=value` header lines, a `---` separator, then H as LRC1.
// Byte output is deterministic for fixed inputs.
void write_code_file(std::ostream& os, const LrcCode& code);
LrcCode read_code_file(std::istream& is);

}  // namespace lrc
