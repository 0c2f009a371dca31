#include "lrc/spread.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "lrc/field.hpp"

namespace lrc {

std::string to_string(SpreadKind k) { return k == SpreadKind::full ? "full" : "partial"; }

std::uint64_t full_spread_size(unsigned m, unsigned t) {
    return ((std::uint64_t(1) << m) - 1) / ((std::uint64_t(1) << t) - 1);
}

std::uint64_t partial_spread_size(unsigned m, unsigned t) {
    const unsigned z = m % t;
    if (z == 0) return full_spread_size(m, t);
    const std::uint64_t num =
        (std::uint64_t(1) << m) - (std::uint64_t(1) << t) * ((std::uint64_t(1) << z) - 1) - 1;
    return num / ((std::uint64_t(1) << t) - 1);
}

SpreadFamily full_spread(unsigned m, unsigned t) {
    if (t == 0 || t > m) throw std::invalid_argument("full_spread: need 1 <= t <= m");
    if (m % t != 0) throw std::invalid_argument("full_spread: t must divide m");
    if (m > 32) throw std::invalid_argument("full_spread: m out of range");

    SpreadFamily fam;
    fam.m = m;
    fam.t = t;
    fam.z = 0;
    fam.kind = SpreadKind::full;

    if (m == 1) {  // V_1 has the single subspace spanned by 1
        Subspace w{1, 1, BitMatrix(1, 1)};
        w.basis.set(0, 0, true);
        fam.members.push_back(std::move(w));
        return fam;
    }

    const FieldCtx& ctx = field_ctx(m);
    const std::uint64_t ell = full_spread_size(m, t);
    const FieldElem gamma = ctx.pow(ctx.alpha(), ell);

    // powers gamma^0 .. gamma^(t-1) span the subfield GF(2^t)
    std::vector<FieldElem> gpow(t);
    gpow[0] = 1;
    for (unsigned j = 1; j < t; ++j) gpow[j] = ctx.mul(gpow[j - 1], gamma);

    fam.members.reserve(ell);
    FieldElem scale = 1;  // alpha^(i-1)
    for (std::uint64_t i = 0; i < ell; ++i) {
        Subspace w{m, t, BitMatrix(m, t)};
        for (unsigned j = 0; j < t; ++j) {
            const BitVec col = ctx.to_vec(ctx.mul(scale, gpow[j]));
            for (unsigned row = 0; row < m; ++row)
                if (col.get(row)) w.basis.set(row, j, true);
        }
        fam.members.push_back(std::move(w));
        scale = ctx.mul(scale, ctx.alpha());
    }
    return fam;
}

namespace {

// Multiplication-map level of the recursion: in an ambient of dimension cur
// (occupying the last `cur` of `m` coordinates), emit one member
// rowspace[I_t | M_c] per c in GF(2^(cur-t)), where M_c row j is the
// expansion of c * alpha^j. Differences M_c - M_c' are multiplication by a
// nonzero field element, hence injective, so members meet pairwise in {0}.
void emit_level(unsigned m, unsigned t, unsigned cur, std::vector<Subspace>& out) {
    const unsigned f = cur - t;  // extension degree of this level's field
    const FieldCtx& ctx = field_ctx(f);
    const unsigned offset = m - cur;

    for (std::uint64_t c = 0; c < (std::uint64_t(1) << f); ++c) {
        Subspace w{m, t, BitMatrix(m, t)};
        for (unsigned j = 0; j < t; ++j) {
            w.basis.set(offset + j, j, true);  // identity part
            const FieldElem prod = ctx.mul(c, ctx.pow(ctx.alpha(), j));
            for (unsigned bit = 0; bit < f; ++bit)
                if ((prod >> bit) & 1) w.basis.set(offset + t + bit, j, true);
        }
        out.push_back(std::move(w));
    }
}

}  // namespace

SpreadFamily partial_spread(unsigned m, unsigned t) {
    if (t == 0 || t > m) throw std::invalid_argument("partial_spread: need 1 <= t <= m");
    if (m > 32) throw std::invalid_argument("partial_spread: m out of range");
    if (m % t == 0) return full_spread(m, t);

    const unsigned z = m % t;
    SpreadFamily fam;
    fam.m = m;
    fam.t = t;
    fam.z = z;
    fam.kind = SpreadKind::partial;
    fam.members.reserve(partial_spread_size(m, t));

    unsigned cur = m;
    while (cur >= 2 * t) {
        emit_level(m, t, cur, fam.members);
        cur -= t;
    }

    // terminal tail of dimension t + z: the subspace on its last t coordinates
    if (cur != t + z) throw std::logic_error("partial_spread: recursion shape broken");
    Subspace w{m, t, BitMatrix(m, t)};
    for (unsigned j = 0; j < t; ++j) w.basis.set(m - t + j, j, true);
    fam.members.push_back(std::move(w));

    if (fam.members.size() != partial_spread_size(m, t))
        throw std::logic_error("partial_spread: size formula mismatch");
    return fam;
}

namespace {

bool pair_disjoint(const Subspace& a, const Subspace& b) {
    BitMatrix joined(a.m, a.t + b.t);
    for (unsigned r = 0; r < a.m; ++r) {
        for (unsigned c = 0; c < a.t; ++c)
            if (a.basis.get(r, c)) joined.set(r, c, true);
        for (unsigned c = 0; c < b.t; ++c)
            if (b.basis.get(r, c)) joined.set(r, a.t + c, true);
    }
    return rank(joined) == std::size_t(a.t) + b.t;
}

}  // namespace

FamilyReport verify_family(const SpreadFamily& f, unsigned threads) {
    const std::size_t ell = f.members.size();

    for (std::size_t i = 0; i < ell; ++i) {
        const Subspace& w = f.members[i];
        if (w.basis.rows() != f.m || w.basis.cols() != f.t || rank(w.basis) != f.t)
            return {false, "member " + std::to_string(i) + " is not a rank-t basis",
                    std::make_pair(i, i)};
    }

    // pairwise trivial intersection: rank([B_i | B_j]) = 2t
    const std::size_t total_pairs = ell * (ell - 1) / 2;
    std::atomic<std::uint64_t> first_bad{~std::uint64_t(0)};

    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = i + 1; j < ell; ++j) {
                if (!pair_disjoint(f.members[i], f.members[j])) {
                    const std::uint64_t code = (std::uint64_t(i) << 32) | j;
                    std::uint64_t cur = first_bad.load();
                    while (code < cur && !first_bad.compare_exchange_weak(cur, code)) {
                    }
                    return;
                }
            }
        }
    };

    if (threads <= 1 || ell < 4) {
        run(0, ell);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (ell + threads - 1) / threads;
        for (unsigned th = 0; th < threads; ++th) {
            const std::size_t b = std::min<std::size_t>(th * chunk, ell);
            const std::size_t e = std::min<std::size_t>(b + chunk, ell);
            pool.emplace_back(run, b, e);
        }
        for (auto& th : pool) th.join();
    }

    if (first_bad.load() != ~std::uint64_t(0)) {
        const std::uint64_t code = first_bad.load();
        const std::size_t i = code >> 32, j = code & 0xffffffffu;
        return {false,
                "members " + std::to_string(i) + " and " + std::to_string(j) +
                    " intersect nontrivially",
                std::make_pair(i, j)};
    }

    if (f.kind == SpreadKind::full) {
        const std::uint64_t covered = ell * ((std::uint64_t(1) << f.t) - 1);
        const std::uint64_t want = (std::uint64_t(1) << f.m) - 1;
        if (covered != want)
            return {false, "coverage count " + std::to_string(covered) + " != 2^m-1",
                    std::nullopt};
        (void)total_pairs;
    }

    return {true, "", std::nullopt};
}

DirectSumGen assemble_gm(unsigned s, const Subspace& w) {
    DirectSumGen g;
    g.s = s;
    g.matrix = BitMatrix(s + w.m, s + w.t);
    for (unsigned i = 0; i < s; ++i) g.matrix.set(i, i, true);
    for (unsigned r = 0; r < w.m; ++r)
        for (unsigned c = 0; c < w.t; ++c)
            if (w.basis.get(r, c)) g.matrix.set(s + r, s + c, true);
    return g;
}

}  // namespace lrc
