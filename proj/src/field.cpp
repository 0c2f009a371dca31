#include "lrc/field.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lrc {

namespace {

// Smallest primitive polynomial of each degree, bit i = coefficient of x^i.
// Re-verified at context construction.
constexpr std::uint64_t kPrimPoly[33] = {
    0, 0,
    0x7,         // m=2
    0xB,         // m=3
    0x13,        // m=4
    0x25,        // m=5
    0x43,        // m=6
    0x83,        // m=7
    0x11D,       // m=8
    0x211,       // m=9
    0x409,       // m=10
    0x805,       // m=11
    0x1053,      // m=12
    0x201B,      // m=13
    0x402B,      // m=14
    0x8003,      // m=15
    0x1002D,     // m=16
    0x20009,     // m=17
    0x40027,     // m=18
    0x80027,     // m=19
    0x100009,    // m=20
    0x200005,    // m=21
    0x400003,    // m=22
    0x800021,    // m=23
    0x100001B,   // m=24
    0x2000009,   // m=25
    0x4000047,   // m=26
    0x8000027,   // m=27
    0x10000009,  // m=28
    0x20000005,  // m=29
    0x40000053,  // m=30
    0x80000009,  // m=31
    0x1000000AF, // m=32
};

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    // carryless product then reduce; m <= 32 keeps the product within 64 bits
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
    }
    for (int bit = 2 * int(m) - 2; bit >= int(m); --bit)
        if ((acc >> bit) & 1) acc ^= prim_poly << (bit - int(m));
    return acc;
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldCtx::element_order(FieldElem x) const {
    if (x == 0) throw std::invalid_argument("element_order: zero element");
    std::uint64_t ord = order;
    for (std::uint64_t p : prime_factors(order)) {
        while (ord % p == 0 && pow(x, ord / p) == 1) ord /= p;
    }
    return ord;
}

BitVec FieldCtx::to_vec(FieldElem x) const {
    BitVec v(m);
    for (unsigned i = 0; i < m; ++i)
        if ((x >> i) & 1) v.set(i, true);
    return v;
}

const FieldCtx& field_ctx(unsigned m) {
    if (m < 2 || m > 32) throw std::invalid_argument("field_ctx: m out of range [2,32]");

    static std::map<unsigned, FieldCtx> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);

    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    FieldCtx ctx;
    ctx.m = m;
    ctx.prim_poly = kPrimPoly[m];
    ctx.order = (m == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1;

    // primitivity: ord(alpha) = 2^m - 1 exactly
    if (ctx.pow(ctx.alpha(), ctx.order) != 1)
        throw std::logic_error("field_ctx: table polynomial is not irreducible");
    for (std::uint64_t p : prime_factors(ctx.order))
        if (ctx.pow(ctx.alpha(), ctx.order / p) == 1)
            throw std::logic_error("field_ctx: table polynomial is not primitive");

    return cache.emplace(m, ctx).first->second;
}

Poly2 Poly2::one() { return from_coeff_bits(1); }
Poly2 Poly2::x() { return from_coeff_bits(2); }

Poly2 Poly2::from_coeff_bits(std::uint64_t bits) {
    Poly2 p;
    if (bits) p.w_.push_back(bits);
    return p;
}

Poly2 Poly2::x_pow_plus_one(unsigned n) {
    Poly2 p;
    p.w_.assign(n / 64 + 1, 0);
    p.w_[0] |= 1;
    p.w_[n >> 6] |= std::uint64_t(1) << (n & 63);
    return p;
}

int Poly2::degree() const {
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i]) return int(i) * 64 + 63 - std::countl_zero(w_[i]);
    return -1;
}

bool Poly2::coeff(unsigned i) const {
    const std::size_t wi = i >> 6;
    if (wi >= w_.size()) return false;
    return (w_[wi] >> (i & 63)) & 1u;
}

std::vector<std::uint64_t> Poly2::normalized() const {
    std::vector<std::uint64_t> v = w_;
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 out;
    out.w_.resize(std::max(w_.size(), o.w_.size()), 0);
    for (std::size_t i = 0; i < w_.size(); ++i) out.w_[i] ^= w_[i];
    for (std::size_t i = 0; i < o.w_.size(); ++i) out.w_[i] ^= o.w_[i];
    return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    const int da = degree(), db = o.degree();
    if (da < 0 || db < 0) return {};
    Poly2 out;
    out.w_.assign(std::size_t(da + db) / 64 + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (!coeff(unsigned(i))) continue;
        // out += o << i
        const unsigned sh = unsigned(i) & 63, wi = unsigned(i) >> 6;
        for (std::size_t j = 0; j < o.w_.size(); ++j) {
            out.w_[wi + j] ^= o.w_[j] << sh;
            if (sh && wi + j + 1 < out.w_.size()) out.w_[wi + j + 1] ^= o.w_[j] >> (64 - sh);
        }
    }
    return out;
}

Poly2 Poly2::mod(const Poly2& d) const {
    const int dd = d.degree();
    if (dd < 0) throw std::invalid_argument("Poly2::mod: division by zero polynomial");
    Poly2 rem = *this;
    int dr = rem.degree();
    while (dr >= dd) {
        const unsigned sh = unsigned(dr - dd);
        // rem ^= d << sh
        const unsigned sb = sh & 63, sw = sh >> 6;
        if (rem.w_.size() < sw + d.w_.size() + 1) rem.w_.resize(sw + d.w_.size() + 1, 0);
        for (std::size_t j = 0; j < d.w_.size(); ++j) {
            rem.w_[sw + j] ^= d.w_[j] << sb;
            if (sb) rem.w_[sw + j + 1] ^= d.w_[j] >> (64 - sb);
        }
        dr = rem.degree();
    }
    return rem;
}

bool Poly2::divides(const Poly2& f) const { return f.mod(*this).is_zero(); }

std::string Poly2::to_string() const {
    const int d = degree();
    if (d < 0) return "0";
    std::string s;
    for (int i = d; i >= 0; --i) {
        if (!coeff(unsigned(i))) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

Poly2 minimal_polynomial(const FieldCtx& ctx, FieldElem beta) {
    if (beta == 0) throw std::invalid_argument("minimal_polynomial: beta must be nonzero");

    // conjugate class {beta, beta^2, beta^4, ...}
    std::vector<FieldElem> conj;
    FieldElem c = beta;
    do {
        conj.push_back(c);
        c = ctx.mul(c, c);
    } while (c != beta);

    // product of (x + conjugate) with coefficients in GF(2^m)
    std::vector<FieldElem> poly{1};  // monic, degree 0
    for (FieldElem root : conj) {
        std::vector<FieldElem> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] ^= poly[i];                 // x * poly
            next[i] ^= ctx.mul(root, poly[i]);      // root * poly
        }
        poly = std::move(next);
    }

    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] > 1)
            throw std::logic_error("minimal_polynomial: coefficient outside GF(2)");
        if (poly[i] == 1) bits |= std::uint64_t(1) << i;
    }
    return Poly2::from_coeff_bits(bits);
}

NthRoot nth_root_context(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("nth_root_context: n must be odd >= 3");

    unsigned e = 0;
    std::uint64_t pw = 1;
    for (unsigned cand = 1; cand <= 32; ++cand) {
        pw = (pw * 2) % n;
        if (pw == 1) {
            e = cand;
            break;
        }
    }
    if (e == 0) throw std::invalid_argument("nth_root_context: ord_n(2) exceeds 32");

    const FieldCtx& ctx = field_ctx(e);
    const FieldElem root = ctx.pow(ctx.alpha(), ctx.order / n);

    if (ctx.pow(root, n) != 1) throw std::logic_error("nth_root_context: root order broken");
    for (std::uint64_t p : prime_factors(n))
        if (ctx.pow(root, n / p) == 1)
            throw std::logic_error("nth_root_context: root order not exactly n");

    return {&ctx, root, e};
}

}  // namespace lrc
