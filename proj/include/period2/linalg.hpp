#pragma once
#include "rings.hpp"
#include <optional>

namespace period2 {

// ---------------------------------------------------------------------------
// Small dense matrices over k and over S.  Row/column conventions follow the
// module code: a sigma-linear map phi with matrix A acts on coordinate
// columns by x -> A * sigma(x), i.e. column j of A is the image of the j-th
// basis vector.
// ---------------------------------------------------------------------------

struct KMat {
    int rows = 0, cols = 0;
    std::vector<KElem> a;
    KMat() = default;
    KMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
    KElem& at(int r, int c) { return a[(size_t)r * cols + c]; }
    KElem at(int r, int c) const { return a[(size_t)r * cols + c]; }
    static KMat id(int n);
};

KMat km_mul(const Field& k, const KMat& A, const KMat& B);
KMat km_frob(const Field& k, const KMat& A);      // entrywise square
KMat km_sqrt(const Field& k, const KMat& A);      // entrywise square root
int km_rank(const Field& k, KMat A);
std::vector<std::vector<KElem>> km_kernel(const Field& k, KMat A); // right kernel basis
// solve A x = b; returns particular solution (free vars 0) or nullopt
std::optional<std::vector<KElem>> km_solve(const Field& k, KMat A, std::vector<KElem> b);
std::optional<KMat> km_inv(const Field& k, const KMat& A);
// basis of the column space, echelonized (deterministic)
KMat km_colspace(const Field& k, const KMat& A);

struct SMat {
    RingPtr R;
    int rows = 0, cols = 0;
    std::vector<SElem> a;
    SMat() = default;
    SMat(RingPtr r, int rr, int cc) : R(std::move(r)), rows(rr), cols(cc) {
        a.assign((size_t)rows * cols, R->szero());
    }
    SElem& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const SElem& at(int r, int c) const { return a[(size_t)r * cols + c]; }
    static SMat id(const RingPtr& R, int n);
    static SMat from_k(const RingPtr& R, const KMat& A);
    KMat residue() const; // entries mod t
    bool operator==(const SMat& o) const;
};

SMat sm_mul(const SMat& A, const SMat& B);
SMat sm_add(const SMat& A, const SMat& B);
SMat sm_frob(const SMat& A);                 // entrywise sigma
SMat sm_scale(const SMat& A, const SElem& s);
SMat sm_transpose(const SMat& A);
SMat sm_hcat(const SMat& A, const SMat& B);
std::vector<SElem> sm_apply(const SMat& A, const std::vector<SElem>& x);

// exact (untruncated) determinant and adjugate via KPoly cofactors
KPoly sm_det_exact(const SMat& A);
std::vector<std::vector<KPoly>> sm_adj_exact(const SMat& A);
// inverse of a matrix whose determinant is a unit of S_N
std::optional<SMat> sm_inv_unit(const SMat& A);
// t^r * A^{-1} for A with v(det A) <= r*rows... entries t^r-integral;
// nullopt when some entry fails integrality (exact valuation test)
std::optional<SMat> sm_scaled_inv(const SMat& A, int r);

// Column echelon (Hermite) form over S_N with t-valuation pivoting.
// Returns the echelon columns; pivots[i] = (row, valuation) of column i.
struct SEchelon {
    SMat cols;
    std::vector<std::pair<int, int>> pivots;
};
SEchelon s_echelon(const SMat& A);
// coefficients expressing target in the span of ech (exact in S_N), or nullopt
std::optional<std::vector<SElem>> s_span_solve(const SEchelon& ech,
                                               const std::vector<SElem>& target);
bool s_span_equal(const SEchelon& a, const SEchelon& b);

} // namespace period2
