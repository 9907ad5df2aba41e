#include "period2/gf2.hpp"

namespace period2 {

uint32_t Field::clmul(uint32_t a, uint32_t b) {
    uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

int Field::poly_deg(uint32_t p) {
    if (!p) return -1;
    return 31 - __builtin_clz(p);
}

uint32_t Field::poly_mod(uint32_t a, uint32_t mod) {
    int dm = poly_deg(mod);
    int da = poly_deg(a);
    while (da >= dm) {
        a ^= mod << (da - dm);
        da = poly_deg(a);
    }
    return a;
}

bool poly_irreducible(uint32_t p) {
    int d = Field::poly_deg(p);
    if (d <= 0) return false;
    if ((p & 1) == 0) return d == 1; // divisible by z
    for (uint32_t q = 2; Field::poly_deg(q) <= d / 2; ++q) {
        if (Field::poly_mod(p, q) == 0) return false;
    }
    return true;
}

uint32_t default_modulus(int m) {
    for (uint32_t p = (1u << m); p < (2u << m); ++p)
        if (poly_irreducible(p)) return p;
    throw Error(ErrKind::BadInput, "no irreducible polynomial found");
}

Field::Field(int m_, uint32_t modulus_) : m(m_), modulus(modulus_) {
    if (m < 1 || m > 24) throw Error(ErrKind::BadInput, "field degree out of range");
    if (poly_deg(modulus) != m || !poly_irreducible(modulus))
        throw Error(ErrKind::BadInput, "field modulus is not an irreducible degree-m polynomial");
}

KElem Field::pow(KElem a, uint64_t n) const {
    KElem r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

KElem Field::sqrt(KElem a) const {
    if (m == 1) return a;
    return pow(a, 1ull << (m - 1));
}

KElem Field::inv(KElem a) const {
    if (!a) throw Error(ErrKind::BadInput, "inverse of 0 in k");
    return pow(a, order() - 2);
}

void BitMatrix::xor_row(int dst, int src) {
    int W = wpr(cols);
    for (int j = 0; j < W; ++j) w[(size_t)dst * W + j] ^= w[(size_t)src * W + j];
}

bool f2_solve(BitMatrix A, std::vector<uint8_t> b, std::vector<uint8_t>& x,
              std::vector<std::vector<uint8_t>>* kernel) {
    int n = A.rows, mcols = A.cols;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < mcols && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (A.get(i, c)) { p = i; break; }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < BitMatrix::wpr(mcols); ++j)
                std::swap(A.w[(size_t)p * BitMatrix::wpr(mcols) + j],
                          A.w[(size_t)r * BitMatrix::wpr(mcols) + j]);
            std::swap(b[p], b[r]);
        }
        for (int i = 0; i < n; ++i) {
            if (i != r && A.get(i, c)) {
                A.xor_row(i, r);
                b[i] ^= b[r];
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    // consistency
    for (int i = r; i < n; ++i)
        if (b[i]) return false;
    x.assign(mcols, 0);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    if (kernel) {
        kernel->clear();
        std::vector<uint8_t> is_pivot(mcols, 0);
        for (int c : pivot_col) is_pivot[c] = 1;
        for (int c = 0; c < mcols; ++c) {
            if (is_pivot[c]) continue;
            std::vector<uint8_t> v(mcols, 0);
            v[c] = 1;
            for (int i = 0; i < r; ++i)
                if (A.get(i, c)) v[pivot_col[i]] = 1;
            kernel->push_back(std::move(v));
        }
    }
    return true;
}

int f2_rank(BitMatrix A) {
    std::vector<uint8_t> b(A.rows, 0), x;
    int n = A.rows, mcols = A.cols, r = 0;
    for (int c = 0; c < mcols && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (A.get(i, c)) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < BitMatrix::wpr(mcols); ++j)
                std::swap(A.w[(size_t)p * BitMatrix::wpr(mcols) + j],
                          A.w[(size_t)r * BitMatrix::wpr(mcols) + j]);
        for (int i = r + 1; i < n; ++i)
            if (A.get(i, c)) A.xor_row(i, r);
        ++r;
    }
    return r;
}

} // namespace period2
