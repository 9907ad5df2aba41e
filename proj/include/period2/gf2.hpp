#pragma once
#include "errors.hpp"
#include <cstdint>
#include <vector>

namespace period2 {

// ---------------------------------------------------------------------------
// The residue field k = F_{2^m}, m <= 24.  Elements are bitmasks of the
// coordinates in the basis 1, z, ..., z^{m-1} where z is a root of the
// defining modulus.  The modulus is stored with its leading bit set
// (degree-m bit), e.g. F_4 = F_2[z]/(z^2+z+1) has modulus 0b111.
// ---------------------------------------------------------------------------

using KElem = uint32_t;

struct Field {
    int m = 1;
    uint32_t modulus = 0b10; // x (unused bit pattern for m=1: modulus = x, i.e. 0b10? see ctor)

    Field() : m(1), modulus(0b11) {} // F_2 itself: z + 1 (any degree-1 modulus)
    Field(int m_, uint32_t modulus_);

    static uint32_t clmul(uint32_t a, uint32_t b);
    static int poly_deg(uint32_t p);
    static uint32_t poly_mod(uint32_t a, uint32_t mod);

    KElem add(KElem a, KElem b) const { return a ^ b; }
    KElem mul(KElem a, KElem b) const { return poly_mod(clmul(a, b), modulus); }
    KElem sqr(KElem a) const { return mul(a, a); }
    // sqrt = x^{2^{m-1}}; Frobenius is bijective on a perfect field
    KElem sqrt(KElem a) const;
    KElem inv(KElem a) const;
    KElem pow(KElem a, uint64_t n) const;
    uint32_t order() const { return 1u << m; }
    KElem gen() const { return m == 1 ? 1 : 2; } // the class of z (or 1 over F_2)

    bool operator==(const Field& o) const { return m == o.m && modulus == o.modulus; }
};

// is p (with leading degree-d bit set) irreducible over F_2? trial division
bool poly_irreducible(uint32_t p);
// the lexicographically smallest irreducible monic polynomial of degree m
uint32_t default_modulus(int m);

// ---------------------------------------------------------------------------
// Dense F_2 linear algebra on bit-packed rows.  Used for every
// Frobenius-semilinear solve in the library.
// ---------------------------------------------------------------------------

struct BitMatrix {
    int rows = 0, cols = 0;
    std::vector<uint64_t> w; // rows * words_per_row

    BitMatrix() = default;
    BitMatrix(int r, int c) : rows(r), cols(c), w((size_t)r * wpr(c), 0) {}
    static int wpr(int c) { return (c + 63) / 64; }
    bool get(int r, int c) const { return (w[(size_t)r * wpr(cols) + c / 64] >> (c % 64)) & 1; }
    void set(int r, int c, bool v) {
        uint64_t& x = w[(size_t)r * wpr(cols) + c / 64];
        uint64_t bit = 1ull << (c % 64);
        x = v ? (x | bit) : (x & ~bit);
    }
    void xor_row(int dst, int src);
};

// Solve A x = b over F_2.  Returns true and writes a particular solution into
// x (free variables zero).  kernel, when non-null, receives a basis of the
// homogeneous solution space.
bool f2_solve(BitMatrix A, std::vector<uint8_t> b, std::vector<uint8_t>& x,
              std::vector<std::vector<uint8_t>>* kernel);

int f2_rank(BitMatrix A);

} // namespace period2
