#pragma once
#include "gf2.hpp"
#include <memory>
#include <vector>

namespace period2 {

// ---------------------------------------------------------------------------
// The ring tower of the construction:
//
//   k = F_{2^m}                        residue field (gf2.hpp)
//   W = W(k)/2^N = (Z/2^N)[z]/(f)      Witt vectors at 2-adic precision N,
//                                      f a monic lift of the field modulus
//   O = W[x]/(E(x))                    E Eisenstein of degree 2e with
//                                      E(x) = E0(x^2); pi = class of x,
//                                      pi^2 = pi_0 generates O_0 = W[pi_0]
//   S = k[t]/(t^{N_S})                 truncated power series, exact
//
// O-elements carry a capped absolute pi-adic precision; v(2) = 2e.
// kappa_SO : S/t^{2e} -> O/2O sends t to pi and lifts k-coefficients by the
// 0/1-polynomial lift (no Teichmueller).
// ---------------------------------------------------------------------------

using WittEl = std::vector<uint64_t>; // length m, coefficients mod 2^N

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Val {
    int v = 0;
    bool at_least = false; // true: "valuation >= v" (element vanished at precision)
    bool operator==(const Val& o) const { return v == o.v && at_least == o.at_least; }
};

struct OElem {
    RingPtr ring;
    std::vector<WittEl> c; // length 2e, coefficient of pi^i
    int prec = 0;          // absolute pi-adic precision

    bool is_zero() const; // zero at working precision
};

struct SElem {
    RingPtr ring;
    std::vector<KElem> c; // length N_S, coefficient of t^i

    bool is_zero() const;
    bool operator==(const SElem& o) const { return c == o.c; }
};

struct Ring : std::enable_shared_from_this<Ring> {
    Field k;
    int e = 1;          // ramification index of K_0 / K_00
    int N = 6;          // 2-adic precision
    int NS = 8;         // t-truncation order of S
    WittEl lift_mod;    // monic degree-m lift of k.modulus over Z/2^N (lower coeffs)
    std::vector<WittEl> eis; // lower coefficients of E(x), length 2e (monic implied)

    int npi() const { return 2 * e * N; } // full pi-adic precision
    uint64_t wmask() const { return (N >= 64) ? ~0ull : ((1ull << N) - 1); }

    static RingPtr make(int m, int e, int N, int NS,
                        const std::vector<std::vector<uint64_t>>* eis = nullptr,
                        uint32_t modulus = 0);

    // ---- Witt arithmetic (W = (Z/2^N)[z]/(lift_mod)) ----
    WittEl wzero() const { return WittEl(k.m, 0); }
    WittEl wone() const;
    WittEl wfrom_int(int64_t n) const;
    WittEl wadd(const WittEl& a, const WittEl& b) const;
    WittEl wneg(const WittEl& a) const;
    WittEl wmul(const WittEl& a, const WittEl& b) const;
    WittEl wmul_pow2(const WittEl& a, int s) const; // a * 2^s
    WittEl wdiv2(const WittEl& a) const;            // exact, caller checks parity
    WittEl winv(const WittEl& a) const;             // a must be a unit (odd)
    bool wodd(const WittEl& a) const;
    int wval2(const WittEl& a) const; // min 2-valuation of coefficients; N if zero
    KElem wred(const WittEl& a) const; // reduce mod 2 into k
    WittEl wlift(KElem a) const;       // 0/1-polynomial lift

    // ---- O arithmetic ----
    OElem ozero(int prec = -1) const;
    OElem oone() const;
    OElem ofrom_int(int64_t n) const;
    OElem opi(int power = 1) const; // pi^power (0 <= power), via repeated mul
    OElem oadd(const OElem& a, const OElem& b) const;
    OElem osub(const OElem& a, const OElem& b) const;
    OElem oneg(const OElem& a) const;
    OElem omul(const OElem& a, const OElem& b) const;
    OElem omul_int(const OElem& a, int64_t n) const;
    Val oval(const OElem& a) const;
    OElem odiv2(const OElem& a) const;            // exact division by 2
    OElem odiv_pi(const OElem& a) const;          // exact division by pi
    OElem odiv_pi_pow(const OElem& a, int r) const;
    OElem oinv(const OElem& a) const;             // a must be a unit
    OElem odiv(const OElem& a, const OElem& b) const; // exact division in the DVR
    OElem otau(const OElem& a) const;             // Galois conjugation pi -> -pi
    bool otau_invariant(const OElem& a) const;    // lies in O_0 at working precision
    OElem oreduce_prec(OElem a, int prec) const;  // canonical form at given precision
    bool oeq(const OElem& a, const OElem& b) const; // equal at min precision

    // ---- S arithmetic ----
    SElem szero() const;
    SElem sone() const;
    SElem sfrom_coeffs(const std::vector<KElem>& c) const;
    SElem st(int power = 1) const; // t^power
    SElem sadd(const SElem& a, const SElem& b) const;
    SElem smul(const SElem& a, const SElem& b) const;
    SElem smul_k(const SElem& a, KElem c) const;
    SElem sfrob(const SElem& a) const; // sigma(s) = s^2
    int sval(const SElem& a) const;    // t-valuation, NS if zero
    SElem sinv(const SElem& a) const;  // a must be a unit in S
    SElem sdiv_t_pow(const SElem& a, int r) const; // exact division by t^r

    // ---- kappa_SO and lifts ----
    // kappa(a) in O/2O: t^i -> pi^i on the first 2e coefficients; prec = 2e.
    OElem kappa(const SElem& a) const;
    // same correspondence but returned at full precision with zero higher
    // pi-digits (the deterministic lift used by the algebra construction)
    OElem kappa_lift(const SElem& a) const;
    // inverse direction: read an O-element mod 2 as a polynomial in t of
    // degree < 2e.  Requires prec >= 2e.
    SElem kappa_inv(const OElem& a) const;

    bool same(const Ring& o) const {
        return k == o.k && e == o.e && N == o.N && NS == o.NS && eis == o.eis;
    }
};

// Exact polynomials over k of unbounded degree (used where truncation at N_S
// would create spurious solutions: determinants, the semilinear Hom solver).
struct KPoly {
    std::vector<KElem> c; // c[i] = coefficient of t^i; trailing zeros allowed
    static KPoly from_s(const SElem& a) { return KPoly{a.c}; }
    int deg() const {
        for (int i = (int)c.size() - 1; i >= 0; --i)
            if (c[i]) return i;
        return -1;
    }
    bool is_zero() const { return deg() < 0; }
};
KPoly kp_add(const Field& k, const KPoly& a, const KPoly& b);
KPoly kp_mul(const Field& k, const KPoly& a, const KPoly& b);
KPoly kp_frob(const Field& k, const KPoly& a);
SElem kp_trunc(const RingPtr& R, const KPoly& a);

} // namespace period2
