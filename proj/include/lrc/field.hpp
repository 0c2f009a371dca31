#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrc/bitmat.hpp"

namespace lrc {

using FieldElem = std::uint64_t;  // coordinates in the polynomial basis {1, a, ..., a^(m-1)}

// GF(2^m) arithmetic context over a fixed built-in primitive polynomial per m.
// Construction re-verifies primitivity (ord(alpha) = 2^m - 1) against the
// factorization of 2^m - 1, so the table cannot silently rot.
struct FieldCtx {
    unsigned m = 0;
    std::uint64_t prim_poly = 0;  // bit i = coefficient of x^i, bit m always set
    std::uint64_t order = 0;      // 2^m - 1

    FieldElem alpha() const { return 2; }  // residue of x

    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem pow(FieldElem a, std::uint64_t e) const;
    std::uint64_t element_order(FieldElem x) const;  // x != 0

    BitVec to_vec(FieldElem x) const;  // m coordinates, position 0 = coefficient of 1
};

// Cached, verified context; throws for m outside [2, 32].
const FieldCtx& field_ctx(unsigned m);

// Polynomial over GF(2), packed coefficient bits, lowest degree first.
class Poly2 {
public:
    Poly2() = default;  // zero polynomial

    static Poly2 one();
    static Poly2 x();
    static Poly2 from_coeff_bits(std::uint64_t bits);  // bit i = coefficient of x^i
    static Poly2 x_pow_plus_one(unsigned n);           // x^n + 1

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
    bool coeff(unsigned i) const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 mod(const Poly2& d) const;
    bool divides(const Poly2& f) const;  // *this | f

    std::string to_string() const;  // e.g. "x^6+x^3+1"

    friend bool operator==(const Poly2& a, const Poly2& b) {
        return a.normalized() == b.normalized();
    }

private:
    std::vector<std::uint64_t> normalized() const;
    std::vector<std::uint64_t> w_;
};

// Product over the 2-cyclotomic conjugate class of beta; monic, coefficients
// verified to lie in GF(2).
Poly2 minimal_polynomial(const FieldCtx& ctx, FieldElem beta);

struct NthRoot {
    const FieldCtx* ctx;    // GF(2^e), e = ord_n(2)
    FieldElem root;         // element of exact multiplicative order n
    unsigned ext_degree;    // e
};

// Smallest extension GF(2^e) containing an n-th root of unity, n odd >= 3.
NthRoot nth_root_context(std::uint64_t n);

// Prime factors (deduplicated) by trial division; helper for order checks.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace lrc
