#include "lrc/desired.hpp"

#include <random>
#include <stdexcept>

namespace lrc {

namespace {

// columns as packed (s+t)-bit masks, bit i = row i
std::vector<std::uint64_t> column_masks(const BitMatrix& a) {
    std::vector<std::uint64_t> cols(a.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) cols[c] |= std::uint64_t(1) << r;
    return cols;
}

}  // namespace

DesiredReport verify_desired(const BitMatrix& a, unsigned s, unsigned t) {
    if (a.rows() != std::size_t(s) + t)
        throw std::invalid_argument("verify_desired: matrix must have s+t rows");
    const std::size_t r = a.cols();

    if (rank(a) != std::size_t(s) + t) return {false, "rank", {}};

    // bottom block: columns nonzero and pairwise distinct
    const std::vector<std::uint64_t> cols = column_masks(a);
    std::vector<std::uint64_t> a2(r);
    for (std::size_t j = 0; j < r; ++j) a2[j] = cols[j] >> s;
    for (std::size_t j = 0; j < r; ++j)
        if (a2[j] == 0) return {false, "pairwise", {j}};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (a2[i] == a2[j]) return {false, "pairwise", {i, j}};

    if (t >= 3) {
        // every 4 columns independent: no <=4-subset XORs to zero
        for (std::size_t j = 0; j < r; ++j)
            if (cols[j] == 0) return {false, "fourwise", {j}};
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                if (cols[i] == cols[j]) return {false, "fourwise", {i, j}};
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) {
                const std::uint64_t ij = cols[i] ^ cols[j];
                for (std::size_t k = j + 1; k < r; ++k) {
                    const std::uint64_t ijk = ij ^ cols[k];
                    if (ijk == 0) return {false, "fourwise", {i, j, k}};
                    for (std::size_t l = k + 1; l < r; ++l)
                        if (ijk == cols[l]) return {false, "fourwise", {i, j, k, l}};
                }
            }
    }
    return {true, "", {}};
}

CyclicSeed cyclic_seed(unsigned b) {
    if (b < 3 || b > 7) throw std::invalid_argument("cyclic_seed: b out of range [3,7]");

    CyclicSeed seed;
    seed.b = b;
    seed.n = (std::uint64_t(1) << b) + 1;

    const NthRoot nr = nth_root_context(seed.n);
    seed.min_poly = minimal_polynomial(*nr.ctx, nr.root);
    if (seed.min_poly.degree() != int(2 * b))
        throw std::logic_error("cyclic_seed: minimal polynomial degree != 2b");
    seed.generator = (Poly2::x() + Poly2::one()) * seed.min_poly;

    // parity check of the punctured [2^b, 2^b-2b, >=5] code. Puncturing the
    // length-n code at its last position folds the all-ones check into the
    // root checks, so column j expands root^j + root^(n-1).
    const std::uint64_t r = std::uint64_t(1) << b;
    const FieldElem last = nr.ctx->pow(nr.root, r);
    seed.aprime = BitMatrix(2 * b, r);
    FieldElem p = 1;
    for (std::uint64_t j = 0; j < r; ++j) {
        const FieldElem col = p ^ last;
        for (unsigned bit = 0; bit < 2 * b; ++bit)
            if ((col >> bit) & 1) seed.aprime.set(bit, j, true);
        p = nr.ctx->mul(p, nr.root);
    }

    const DesiredReport rep = verify_desired(seed.aprime, 0, 2 * b);
    if (!rep.pass) throw std::logic_error("cyclic_seed: seed matrix failed " + rep.violation);
    return seed;
}

namespace {

// The bottom-block pairwise condition on T * Aprime says exactly that the
// kernel of T's bottom t rows (an s-dimensional subspace) avoids every
// column and every pairwise column sum of Aprime. Uniform T sampling almost
// never hits such a kernel once those sums cover half the ambient space, so
// the search builds the kernel first: a randomized-order DFS over the
// admissible vectors, closed under addition at every step.
struct KernelSearch {
    std::vector<std::uint64_t> good;  // admissible nonzero vectors, shuffled
    std::vector<std::uint8_t> is_good;
    unsigned want = 0;
    std::uint64_t nodes = 0, node_cap = 0;
    std::vector<std::uint64_t> basis;
    std::vector<std::uint64_t> span;  // all subset sums of basis

    bool dfs(std::size_t start) {
        if (basis.size() == want) return true;
        for (std::size_t i = start; i < good.size(); ++i) {
            if (++nodes > node_cap) return false;
            const std::uint64_t v = good[i];
            bool ok = true;
            for (std::uint64_t sp : span)
                if (sp && !is_good[sp ^ v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            const std::size_t old = span.size();
            for (std::size_t j = 0; j < old; ++j) span.push_back(span[j] ^ v);
            basis.push_back(v);
            if (dfs(i + 1)) return true;
            basis.pop_back();
            span.resize(old);
        }
        return false;
    }
};

}  // namespace

std::optional<DesiredMatrix> search_desired(unsigned b, unsigned s, std::uint64_t seed,
                                            std::uint64_t budget) {
    if (s >= 2 * b) throw std::invalid_argument("search_desired: need s < 2b");
    if (s >= b && s != 0)
        throw std::invalid_argument("search_desired: need s < b (or s = 0)");
    const unsigned t = 2 * b - s;
    const CyclicSeed cs = cyclic_seed(b);
    const std::uint64_t r = cs.n - 1;
    const unsigned dim = 2 * b;

    // columns and pairwise column sums of Aprime, as dim-bit masks
    std::vector<std::uint64_t> cols(r, 0);
    for (unsigned row = 0; row < dim; ++row)
        for (std::uint64_t c = 0; c < r; ++c)
            if (cs.aprime.get(row, c)) cols[c] |= std::uint64_t(1) << row;
    std::vector<std::uint8_t> is_good(std::size_t(1) << dim, 1);
    is_good[0] = 0;
    for (std::uint64_t c : cols) is_good[c] = 0;
    for (std::uint64_t i = 0; i < r; ++i)
        for (std::uint64_t j = i + 1; j < r; ++j) is_good[cols[i] ^ cols[j]] = 0;

    std::vector<std::uint64_t> good_base;
    for (std::uint64_t v = 1; v < (std::uint64_t(1) << dim); ++v)
        if (is_good[v]) good_base.push_back(v);

    for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
        std::mt19937_64 rng(seed + attempt);

        KernelSearch ks;
        ks.good = good_base;
        ks.is_good = is_good;
        ks.want = s;
        ks.node_cap = 200000;
        for (std::size_t j = ks.good.size(); j > 1; --j)
            std::swap(ks.good[j - 1], ks.good[rng() % j]);
        ks.span.push_back(0);
        if (!ks.dfs(0)) continue;

        // bottom t rows of T: a basis of the annihilator of the kernel;
        // top s rows: unit vectors at the annihilator's non-pivot columns
        BitMatrix kmat(s, dim);
        for (unsigned i = 0; i < s; ++i)
            for (unsigned j = 0; j < dim; ++j)
                if ((ks.basis[i] >> j) & 1) kmat.set(i, j, true);
        const BitMatrix ann = nullspace(kmat);  // t x dim

        BitMatrix tmat(dim, dim);
        const Rref ann_rref = rref(ann);
        std::vector<std::uint8_t> pivot(dim, 0);
        for (std::size_t c : ann_rref.pivot_cols) pivot[c] = 1;
        unsigned top = 0;
        for (unsigned c = 0; c < dim && top < s; ++c)
            if (!pivot[c]) tmat.set(top++, c, true);
        for (unsigned i = 0; i < t; ++i)
            for (unsigned j = 0; j < dim; ++j)
                if (ann.get(i, j)) tmat.set(s + i, j, true);
        if (rank(tmat) != dim) continue;

        std::vector<std::uint64_t> perm(r);
        for (std::uint64_t j = 0; j < r; ++j) perm[j] = j;
        for (std::uint64_t j = r; j > 1; --j)
            std::swap(perm[j - 1], perm[rng() % j]);

        BitMatrix cand(dim, r);
        const BitMatrix prod = matmul(tmat, cs.aprime);
        for (unsigned row = 0; row < dim; ++row)
            for (std::uint64_t c = 0; c < r; ++c)
                if (prod.get(row, c)) cand.set(row, perm[c], true);

        if (verify_desired(cand, s, t).pass)
            return DesiredMatrix{s, t, r, std::move(cand)};
    }
    return std::nullopt;
}

// Stored fixture tables live in fixtures.cpp.
const std::vector<std::string>* fixture_rows(unsigned b, unsigned s);

bool has_fixture(unsigned b, unsigned s) { return fixture_rows(b, s) != nullptr; }

DesiredMatrix fixture(unsigned b, unsigned s) {
    const std::vector<std::string>* rows = fixture_rows(b, s);
    if (!rows)
        throw std::invalid_argument("fixture: no stored matrix for (b=" + std::to_string(b) +
                                    ", s=" + std::to_string(s) + ")");
    DesiredMatrix d;
    d.s = s;
    d.t = 2 * b - s;
    d.r = std::uint64_t(1) << b;
    d.a = BitMatrix::from_rows(*rows);
    const DesiredReport rep = verify_desired(d.a, d.s, d.t);
    if (!rep.pass) throw std::logic_error("fixture: stored matrix failed " + rep.violation);
    return d;
}

std::vector<std::pair<unsigned, unsigned>> fixture_keys() {
    return {{3, 2}, {4, 3}, {5, 4}, {6, 4}, {7, 4}};
}

std::uint64_t fixture_checksum(unsigned b, unsigned s) {
    const std::vector<std::string>* rows = fixture_rows(b, s);
    if (!rows) return 0;
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const std::string& row : *rows)
        for (char ch : row) {
            h ^= std::uint8_t(ch);
            h *= 0x100000001b3ull;
        }
    return h;
}

}  // namespace lrc
