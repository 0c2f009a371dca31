#include "lrc/certify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lrc {

std::int64_t singleton_like(std::int64_t n, std::int64_t k, std::int64_t r) {
    if (!(n > k && k >= 1 && r >= 1))
        throw std::invalid_argument("singleton_like: need n > k >= 1, r >= 1");
    return n - k - (k + r - 1) / r + 2;
}

namespace {

// minimal unsigned bignum for the exact log-vs-rational comparison
struct BigU {
    std::vector<std::uint64_t> w;  // little-endian

    static BigU from(std::uint64_t v) { return {{v}}; }

    void mul_small(std::uint64_t f) {
        unsigned __int128 carry = 0;
        for (auto& word : w) {
            const unsigned __int128 prod = (unsigned __int128)word * f + carry;
            word = std::uint64_t(prod);
            carry = prod >> 64;
        }
        while (carry) {
            w.push_back(std::uint64_t(carry));
            carry >>= 64;
        }
    }

    std::uint64_t bit_length() const {
        for (std::size_t i = w.size(); i-- > 0;)
            if (w[i]) return i * 64 + 64 - std::countl_zero(w[i]);
        return 0;
    }

    bool is_power_of_two() const {
        int nonzero = 0;
        std::uint64_t top = 0;
        for (std::uint64_t word : w)
            if (word) {
                ++nonzero;
                top = word;
            }
        return nonzero == 1 && std::has_single_bit(top);
    }
};

// compare log2(L) against p/q exactly: -1 less, 0 equal, +1 greater
int cmp_log2_vs_rational(std::uint64_t L, std::uint64_t p, std::uint64_t q) {
    const std::uint64_t lo = 63 - std::countl_zero(L);  // floor(log2 L)
    const bool l_pow2 = std::has_single_bit(L);

    if (l_pow2) {  // log2(L) = lo exactly
        if (lo * q < p) return -1;
        if (lo * q > p) return 1;
        return 0;
    }
    // lo < log2(L) < lo + 1
    if (p >= (lo + 1) * q) return -1;
    if (p <= lo * q) return 1;
    // straddling: compare L^q with 2^p
    BigU acc = BigU::from(1);
    for (std::uint64_t i = 0; i < q; ++i) acc.mul_small(L);
    const std::uint64_t bl = acc.bit_length();
    if (bl < p + 1) return -1;
    if (bl > p + 1) return 1;
    return acc.is_power_of_two() ? 0 : 1;
}

std::uint64_t ceil_log2(std::uint64_t L) {
    const std::uint64_t lo = 63 - std::countl_zero(L);
    return std::has_single_bit(L) ? lo : lo + 1;
}

}  // namespace

std::int64_t rate_bound_k(std::uint64_t n, std::uint64_t r, MinBranch* branch,
                          bool* preconditions) {
    if (n == 0 || r == 0) throw std::invalid_argument("rate_bound_k: n, r >= 1");
    if (n % (r + 1) != 0) throw std::invalid_argument("rate_bound_k: (r+1) must divide n");

    if (preconditions) *preconditions = (r >= 2 && 2 * (r + 2) <= n);

    const std::uint64_t rn = r * n;
    const std::uint64_t I = rn / (r + 1);
    const std::uint64_t L = 1 + rn / 2;  // rn even for every even r; odd r uses 2L' = 2 + rn
    const std::uint64_t p = rn, q = (r + 1) * (r + 2);

    int cmp;
    if (rn % 2 == 0) {
        cmp = cmp_log2_vs_rational(L, p, q);
    } else {
        // log2((2+rn)/2) = log2(2+rn) - 1 vs p/q  <=>  log2(2+rn) vs (p+q)/q
        cmp = cmp_log2_vs_rational(2 + rn, p + q, q);
    }

    if (cmp <= 0) {
        if (branch) *branch = MinBranch::log2;
        const std::uint64_t cl =
            (rn % 2 == 0) ? ceil_log2(L) : ceil_log2(2 + rn) - 1;  // ceil(log2((2+rn)/2))
        return std::int64_t(I) - std::int64_t(cl);
    }
    if (branch) *branch = MinBranch::rational;
    return std::int64_t(I) - std::int64_t((p + q - 1) / q);  // floor(I - p/q)
}

BoundReport bound_report(std::uint64_t n, std::int64_t k, std::uint64_t r) {
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.singleton_like_d_max = singleton_like(std::int64_t(n), k, std::int64_t(r));
    rep.rate_bound_k_max = rate_bound_k(n, r, &rep.min_branch, &rep.preconditions_met);
    rep.k_optimal = (k == rep.rate_bound_k_max);
    rep.d_optimal_singleton = (rep.singleton_like_d_max == 6);
    return rep;
}

EllRange ell_range(unsigned b, unsigned s, unsigned m, SpreadKind kind) {
    if (b < 1) throw std::invalid_argument("ell_range: b >= 1");
    if (s >= b && s != 0) throw std::invalid_argument("ell_range: need s < b (or s = 0)");
    const unsigned t = 2 * b - s;
    if (m < 4 * b) throw std::invalid_argument("ell_range: optimality range needs m >= 4b");
    if (m + s >= 64) throw std::invalid_argument("ell_range: m + s out of range");
    const bool divides = (m % t == 0);
    if ((kind == SpreadKind::full) != divides)
        throw std::invalid_argument("ell_range: spread kind inconsistent with divisibility");

    EllRange out;
    out.lo_num = (std::uint64_t(1) << (m + s - 1)) - 1;
    out.lo_den = (std::uint64_t(1) << (b - 1)) * ((std::uint64_t(1) << b) + 1);
    out.lo_exclusive = std::int64_t(out.lo_num / out.lo_den);

    if (kind == SpreadKind::full) {
        out.hi_inclusive = std::int64_t(full_spread_size(m, t));
    } else {
        const unsigned z = m % t;
        if (z > b)
            throw std::invalid_argument("ell_range: z = m mod (2b-s) exceeds b");
        out.constraint_note =
            (z == b) ? "z = b accepted (z <= b reading)" : "z < b";
        out.hi_inclusive = std::int64_t(partial_spread_size(m, t));
    }
    if (out.lo_exclusive >= out.hi_inclusive)
        throw std::invalid_argument("ell_range: empty range for these parameters");
    return out;
}

namespace {

struct BlockColumns {
    // lower-part column masks per group, including the group's zero column
    std::vector<std::vector<std::uint64_t>> cols;
};

BlockColumns lower_block_columns(const LrcCode& code) {
    const std::size_t ng = code.groups();
    const std::size_t low_rows = code.h.rows() - ng;
    if (low_rows > 64) throw std::invalid_argument("check_lemma6: lower part exceeds 64 rows");

    BlockColumns bc;
    bc.cols.resize(ng);
    for (std::size_t g = 0; g < ng; ++g) {
        const std::uint64_t off = code.group_offset[g], end = code.group_offset[g + 1];
        bc.cols[g].resize(end - off, 0);
        for (std::size_t row = 0; row < low_rows; ++row)
            for (std::uint64_t c = off; c < end; ++c)
                if (code.h.get(ng + row, c)) bc.cols[g][c - off] |= std::uint64_t(1) << row;
    }
    return bc;
}

}  // namespace

Lemma6Report check_lemma6(const LrcCode& code, unsigned threads) {
    (void)threads;  // the sorted pair scan needs no work queue
    const BlockColumns bc = lower_block_columns(code);
    const std::size_t ng = bc.cols.size();

    Lemma6Report rep;
    rep.tests = 0;

    // (1) all within-block column pairs distinct, (2) no within-block
    // quadruple XORs to zero
    for (std::size_t g = 0; g < ng; ++g) {
        const auto& cols = bc.cols[g];
        const std::uint64_t off = code.group_offset[g];
        const std::size_t w = cols.size();
        for (std::size_t i = 0; i < w; ++i)
            for (std::size_t j = i + 1; j < w; ++j) {
                ++rep.tests;
                if (cols[i] == cols[j]) {
                    rep.condition = 1;
                    rep.blocks = {g, g};
                    rep.columns = {off + i, off + j};
                    return rep;
                }
            }
        for (std::size_t i = 0; i < w; ++i)
            for (std::size_t j = i + 1; j < w; ++j) {
                const std::uint64_t ij = cols[i] ^ cols[j];
                for (std::size_t k = j + 1; k < w; ++k) {
                    const std::uint64_t ijk = ij ^ cols[k];
                    for (std::size_t l = k + 1; l < w; ++l) {
                        ++rep.tests;
                        if (ijk == cols[l]) {
                            rep.condition = 2;
                            rep.blocks = {g, g};
                            rep.columns = {off + i, off + j, off + k, off + l};
                            return rep;
                        }
                    }
                }
            }
    }

    // (3) no 2+2 cross-block quadruple XORs to zero, i.e. the same pair-sum
    // value never occurs in two distinct blocks. Scanning a sorted list of
    // all pair sums covers every cross pair without the quadratic sweep.
    struct PairSum {
        std::uint64_t value;
        std::uint32_t block;
        std::uint32_t i, j;  // in-block column indices
    };
    std::vector<PairSum> sums;
    std::uint64_t total_pairs = 0, sq_sum = 0;
    for (std::size_t g = 0; g < ng; ++g) {
        const auto& cols = bc.cols[g];
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t j = i + 1; j < cols.size(); ++j)
                sums.push_back({cols[i] ^ cols[j], std::uint32_t(g), std::uint32_t(i),
                                std::uint32_t(j)});
        const std::uint64_t mine = cols.size() * (cols.size() - 1) / 2;
        total_pairs += mine;
        sq_sum += mine * mine;
    }
    // logical test count: every pair-of-pairs across distinct blocks
    rep.tests += (total_pairs * total_pairs - sq_sum) / 2;
    std::sort(sums.begin(), sums.end(), [](const PairSum& a, const PairSum& b) {
        return a.value < b.value || (a.value == b.value && a.block < b.block);
    });
    for (std::size_t i = 0; i + 1 < sums.size(); ++i) {
        if (sums[i].value == sums[i + 1].value && sums[i].block != sums[i + 1].block) {
            rep.condition = 3;
            rep.blocks = {sums[i].block, sums[i + 1].block};
            rep.columns = {code.group_offset[sums[i].block] + sums[i].i,
                           code.group_offset[sums[i].block] + sums[i].j,
                           code.group_offset[sums[i + 1].block] + sums[i + 1].i,
                           code.group_offset[sums[i + 1].block] + sums[i + 1].j};
            return rep;
        }
    }

    rep.pass = true;
    return rep;
}

LocalityReport verify_locality(const LrcCode& code) {
    const std::size_t ng = code.groups();
    const std::uint64_t n = code.n();

    std::vector<std::uint8_t> covered(n, 0);
    std::uint64_t max_width = 0;
    for (std::size_t g = 0; g < ng; ++g) {
        std::uint64_t width = 0;
        for (std::uint64_t c = 0; c < n; ++c) {
            if (!code.h.get(g, c)) continue;
            if (covered[c]) return {false, 0, "column " + std::to_string(c) + " in two groups"};
            covered[c] = 1;
            ++width;
        }
        if (width == 0) return {false, 0, "empty locality row " + std::to_string(g)};
        max_width = std::max(max_width, width);
    }
    for (std::uint64_t c = 0; c < n; ++c)
        if (!covered[c]) return {false, 0, "column " + std::to_string(c) + " uncovered"};
    return {true, max_width - 1, ""};
}

std::uint64_t exact_min_distance(const LrcCode& code) {
    const std::int64_t k = code.dimension();
    if (k < 1) throw std::invalid_argument("exact_min_distance: dimension < 1");
    if (k > 24) throw std::invalid_argument("exact_min_distance: k > 24 enumeration guard");

    const BitMatrix gen = nullspace(code.h);
    if (std::int64_t(gen.rows()) != k)
        throw std::logic_error("exact_min_distance: generator dimension mismatch");

    const std::size_t words = gen.words_per_row();
    std::vector<std::uint64_t> cw(words, 0);
    std::uint64_t best = ~std::uint64_t(0);

    // Gray-code walk over all nonzero information vectors
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << k); ++i) {
        const unsigned flip = std::countr_zero(i);
        auto row = gen.row(flip);
        std::uint64_t weight = 0;
        for (std::size_t w = 0; w < words; ++w) {
            cw[w] ^= row[w];
            weight += std::popcount(cw[w]);
        }
        best = std::min(best, weight);
    }
    return best;
}

OptimalityReport optimality_report(const LrcCode& code) {
    OptimalityReport rep;
    const LocalityReport loc = verify_locality(code);
    if (!loc.pass) throw std::invalid_argument("optimality_report: " + loc.detail);

    rep.computed_k = std::uint64_t(code.dimension());
    rep.rank_full = (code.rank_h == code.groups() + code.params.s + code.params.m);
    rep.bounds = bound_report(code.n(), code.dimension(), loc.r);

    rep.ell_in_range = false;
    try {
        const EllRange range = ell_range(code.params.b, code.params.s, code.params.m,
                                         code.params.kind);
        const std::int64_t ell = std::int64_t(code.groups());
        rep.ell_in_range = (ell > range.lo_exclusive && ell <= range.hi_inclusive);
    } catch (const std::invalid_argument& e) {
        rep.notes.push_back(std::string("ell range not applicable: ") + e.what());
    }
    for (const std::string& w : code.warnings) rep.notes.push_back(w);
    return rep;
}

}  // namespace lrc
