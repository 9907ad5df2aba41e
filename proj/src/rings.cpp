#include "period2/rings.hpp"
#include <algorithm>
#include <cassert>

namespace period2 {

// ----------------------------------------------------------------- factory

RingPtr Ring::make(int m, int e, int N, int NS,
                   const std::vector<std::vector<uint64_t>>* eis_in, uint32_t modulus) {
    if (m < 1 || e < 1 || N < 2 || N > 62) throw Error(ErrKind::BadInput, "bad ring parameters");
    if (NS < 4 * e) throw Error(ErrKind::BadInput, "N_S must be at least 4e");
    auto R = std::make_shared<Ring>();
    R->k = Field(m, modulus ? modulus : default_modulus(m));
    R->e = e;
    R->N = N;
    R->NS = NS;
    R->lift_mod = WittEl(m, 0);
    for (int i = 0; i < m; ++i) R->lift_mod[i] = (R->k.modulus >> i) & 1;
    if (eis_in) {
        if ((int)eis_in->size() != 2 * e)
            throw Error(ErrKind::BadInput, "Eisenstein polynomial must have degree 2e");
        R->eis.clear();
        for (auto& w : *eis_in) {
            if ((int)w.size() != m) throw Error(ErrKind::BadInput, "bad Eisenstein coefficient");
            WittEl x = w;
            for (auto& d : x) d &= R->wmask();
            R->eis.push_back(x);
        }
        // E Eisenstein with E(x) = E0(x^2): odd coefficients vanish, constant
        // term has 2-valuation exactly one, the rest are even.
        for (int i = 0; i < 2 * e; ++i) {
            int v = R->wval2(R->eis[i]);
            if (i % 2 == 1 && v < N)
                throw Error(ErrKind::BadInput, "E(x) must be a polynomial in x^2");
            if (i == 0 && v != 1)
                throw Error(ErrKind::BadInput, "constant term of E must have 2-valuation 1");
            if (i > 0 && v < 1) throw Error(ErrKind::BadInput, "E is not Eisenstein");
        }
    } else {
        // default E(x) = x^{2e} - 2
        R->eis.assign(2 * e, R->wzero());
        R->eis[0] = R->wfrom_int(-2);
    }
    return R;
}

// ----------------------------------------------------------------- Witt ops

WittEl Ring::wone() const {
    WittEl r = wzero();
    r[0] = 1;
    return r;
}

WittEl Ring::wfrom_int(int64_t n) const {
    WittEl r = wzero();
    uint64_t u = (uint64_t)n;
    r[0] = u & wmask();
    return r;
}

WittEl Ring::wadd(const WittEl& a, const WittEl& b) const {
    WittEl r = wzero();
    for (int i = 0; i < k.m; ++i) r[i] = (a[i] + b[i]) & wmask();
    return r;
}

WittEl Ring::wneg(const WittEl& a) const {
    WittEl r = wzero();
    for (int i = 0; i < k.m; ++i) r[i] = (-a[i]) & wmask();
    return r;
}

WittEl Ring::wmul(const WittEl& a, const WittEl& b) const {
    int m = k.m;
    std::vector<uint64_t> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) & wmask();
    // reduce modulo the monic lift_mod
    for (int d = 2 * m - 2; d >= m; --d) {
        uint64_t top = prod[d] & wmask();
        if (!top) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i)
            prod[d - m + i] = (prod[d - m + i] - top * lift_mod[i]) & wmask();
    }
    WittEl r = wzero();
    for (int i = 0; i < m; ++i) r[i] = prod[i] & wmask();
    return r;
}

WittEl Ring::wmul_pow2(const WittEl& a, int s) const {
    WittEl r = wzero();
    if (s >= N) return r;
    for (int i = 0; i < k.m; ++i) r[i] = (a[i] << s) & wmask();
    return r;
}

WittEl Ring::wdiv2(const WittEl& a) const {
    WittEl r = wzero();
    for (int i = 0; i < k.m; ++i) {
        assert((a[i] & 1) == 0);
        r[i] = (a[i] >> 1) & wmask();
    }
    return r;
}

bool Ring::wodd(const WittEl& a) const {
    for (auto d : a)
        if (d & 1) return true;
    return false;
}

int Ring::wval2(const WittEl& a) const {
    int v = N;
    for (auto d : a) {
        if (!d) continue;
        v = std::min(v, __builtin_ctzll(d));
    }
    return v;
}

KElem Ring::wred(const WittEl& a) const {
    KElem r = 0;
    for (int i = 0; i < k.m; ++i)
        if (a[i] & 1) r |= (1u << i);
    return r;
}

WittEl Ring::wlift(KElem a) const {
    WittEl r = wzero();
    for (int i = 0; i < k.m; ++i) r[i] = (a >> i) & 1;
    return r;
}

WittEl Ring::winv(const WittEl& a) const {
    if (!wodd(a)) throw Error(ErrKind::NotDivisible, "inverse of a non-unit in W");
    // Newton from the residue-field inverse; error squares each step
    WittEl x = wlift(k.inv(wred(a)));
    int digits = 1;
    while (digits < N) {
        // x <- x * (2 - a x)
        WittEl t = wmul(a, x);
        WittEl two = wfrom_int(2);
        x = wmul(x, wadd(two, wneg(t)));
        digits *= 2;
    }
    return x;
}

// -------------------------------------------------------------------- O ops

// canonical form: coefficient of pi^i is only known mod 2^{ceil((prec-i)/2e)}
OElem Ring::oreduce_prec(OElem a, int prec) const {
    prec = std::min(prec, npi());
    a.prec = prec;
    for (int i = 0; i < 2 * e; ++i) {
        int digits = 0;
        if (prec > i) digits = (prec - i + 2 * e - 1) / (2 * e);
        digits = std::min(digits, N);
        uint64_t mask = (digits >= 64) ? ~0ull : ((1ull << digits) - 1);
        for (auto& d : a.c[i]) d &= mask;
    }
    return a;
}

OElem Ring::ozero(int prec) const {
    OElem r;
    r.ring = shared_from_this();
    r.c.assign(2 * e, wzero());
    r.prec = prec < 0 ? npi() : prec;
    return r;
}

OElem Ring::oone() const {
    OElem r = ozero();
    r.c[0] = wone();
    return r;
}

OElem Ring::ofrom_int(int64_t n) const {
    OElem r = ozero();
    r.c[0] = wfrom_int(n);
    return r;
}

OElem Ring::opi(int power) const {
    OElem r = oone();
    OElem p = ozero();
    p.c[1] = wone(); // 2e >= 2 always
    for (int i = 0; i < power; ++i) r = omul(r, p);
    return r;
}

OElem Ring::oadd(const OElem& a, const OElem& b) const {
    assert(a.ring->same(*b.ring));
    OElem r = ozero();
    for (int i = 0; i < 2 * e; ++i) r.c[i] = wadd(a.c[i], b.c[i]);
    return oreduce_prec(r, std::min(a.prec, b.prec));
}

OElem Ring::oneg(const OElem& a) const {
    OElem r = ozero();
    for (int i = 0; i < 2 * e; ++i) r.c[i] = wneg(a.c[i]);
    return oreduce_prec(r, a.prec);
}

OElem Ring::osub(const OElem& a, const OElem& b) const { return oadd(a, oneg(b)); }

OElem Ring::omul(const OElem& a, const OElem& b) const {
    assert(a.ring->same(*b.ring));
    int d = 2 * e;
    std::vector<WittEl> prod(2 * d - 1, wzero());
    for (int i = 0; i < d; ++i) {
        if (wval2(a.c[i]) >= N) continue;
        for (int j = 0; j < d; ++j) prod[i + j] = wadd(prod[i + j], wmul(a.c[i], b.c[j]));
    }
    // reduce modulo monic E: x^{2e} = -eis
    for (int t = 2 * d - 2; t >= d; --t) {
        WittEl top = prod[t];
        if (wval2(top) >= N) continue;
        prod[t] = wzero();
        for (int i = 0; i < d; ++i)
            prod[t - d + i] = wadd(prod[t - d + i], wneg(wmul(top, eis[i])));
    }
    OElem r = ozero();
    for (int i = 0; i < d; ++i) r.c[i] = prod[i];
    return oreduce_prec(r, std::min(a.prec, b.prec));
}

OElem Ring::omul_int(const OElem& a, int64_t n) const { return omul(a, ofrom_int(n)); }

bool OElem::is_zero() const {
    for (auto& w : c)
        for (auto d : w)
            if (d) return false;
    return true;
}

Val Ring::oval(const OElem& a) const {
    // v(sum c_i pi^i) = min_i (i + 2e*val2(c_i)); exact because the positions
    // i + 2e*val2 are distinct across i in [0, 2e)
    int v = a.prec;
    bool found = false;
    for (int i = 0; i < 2 * e; ++i) {
        int v2 = wval2(a.c[i]);
        if (v2 >= N) continue;
        int vi = i + 2 * e * v2;
        if (vi < v) { v = vi; found = true; }
    }
    if (!found || v >= a.prec) return Val{a.prec, true};
    return Val{v, false};
}

OElem Ring::odiv2(const OElem& a) const {
    if (a.prec <= 2 * e) throw Error(ErrKind::PrecisionExhausted, "division by 2 at exhausted precision");
    OElem r = ozero();
    for (int i = 0; i < 2 * e; ++i) {
        if (wodd(a.c[i]))
            throw Error(ErrKind::NotDivisible, "element has valuation < v(2)");
        r.c[i] = wdiv2(a.c[i]);
    }
    return oreduce_prec(r, a.prec - 2 * e);
}

OElem Ring::odiv_pi(const OElem& a) const {
    if (a.prec <= 1) throw Error(ErrKind::PrecisionExhausted, "division by pi at exhausted precision");
    // a = pi*q: q_{2e-1} = -a_0/E_0, q_i = a_{i+1} + q_{2e-1}*E_{i+1}
    if (wodd(a.c[0])) throw Error(ErrKind::NotDivisible, "element has valuation 0");
    int d = 2 * e;
    WittEl e0half = wdiv2(eis[0]); // unit: v2(E_0) = 1
    WittEl qtop = wneg(wmul(wdiv2(a.c[0]), winv(e0half)));
    OElem r = ozero();
    r.c[d - 1] = qtop;
    for (int i = 0; i + 1 < d; ++i) r.c[i] = wadd(a.c[i + 1], wmul(qtop, eis[i + 1]));
    return oreduce_prec(r, a.prec - 1);
}

OElem Ring::odiv_pi_pow(const OElem& a, int r) const {
    OElem x = a;
    for (int i = 0; i < r; ++i) x = odiv_pi(x);
    return x;
}

OElem Ring::oinv(const OElem& a) const {
    Val v = oval(a);
    if (v.at_least || v.v != 0) throw Error(ErrKind::NotDivisible, "inverse of a non-unit in O");
    // Newton: x <- x(2 - ax), seeded with the residue-field inverse
    OElem x = ozero();
    x.c[0] = wlift(k.inv(wred(a.c[0])));
    int digits = 1;
    while (digits < npi()) {
        OElem t = omul(a, x);
        x = omul(x, osub(ofrom_int(2), t));
        digits *= 2;
    }
    return oreduce_prec(x, a.prec);
}

OElem Ring::odiv(const OElem& a, const OElem& b) const {
    Val vb = oval(b);
    if (vb.at_least) throw Error(ErrKind::PrecisionExhausted, "division by 0 at working precision");
    Val va = oval(a);
    if (!va.at_least && va.v < vb.v)
        throw Error(ErrKind::NotDivisible, "division with valuation drop in O");
    OElem num = odiv_pi_pow(a, vb.v);
    OElem unit = odiv_pi_pow(b, vb.v);
    return omul(num, oinv(unit));
}

OElem Ring::otau(const OElem& a) const {
    OElem r = a;
    for (int i = 1; i < 2 * e; i += 2) r.c[i] = wneg(r.c[i]);
    return oreduce_prec(r, a.prec);
}

bool Ring::otau_invariant(const OElem& a) const {
    return osub(a, otau(a)).is_zero();
}

bool Ring::oeq(const OElem& a, const OElem& b) const {
    OElem d = osub(a, b);
    return d.is_zero();
}

// -------------------------------------------------------------------- S ops

bool SElem::is_zero() const {
    for (auto x : c)
        if (x) return false;
    return true;
}

SElem Ring::szero() const {
    SElem r;
    r.ring = shared_from_this();
    r.c.assign(NS, 0);
    return r;
}

SElem Ring::sone() const {
    SElem r = szero();
    r.c[0] = 1;
    return r;
}

SElem Ring::sfrom_coeffs(const std::vector<KElem>& c) const {
    SElem r = szero();
    for (int i = 0; i < (int)c.size() && i < NS; ++i) r.c[i] = c[i];
    return r;
}

SElem Ring::st(int power) const {
    SElem r = szero();
    if (power < NS) r.c[power] = 1;
    return r;
}

SElem Ring::sadd(const SElem& a, const SElem& b) const {
    SElem r = szero();
    for (int i = 0; i < NS; ++i) r.c[i] = a.c[i] ^ b.c[i];
    return r;
}

SElem Ring::smul(const SElem& a, const SElem& b) const {
    SElem r = szero();
    for (int i = 0; i < NS; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; i + j < NS; ++j)
            if (b.c[j]) r.c[i + j] ^= k.mul(a.c[i], b.c[j]);
    }
    return r;
}

SElem Ring::smul_k(const SElem& a, KElem cc) const {
    SElem r = szero();
    for (int i = 0; i < NS; ++i) r.c[i] = k.mul(a.c[i], cc);
    return r;
}

SElem Ring::sfrob(const SElem& a) const {
    SElem r = szero();
    for (int i = 0; 2 * i < NS; ++i) r.c[2 * i] = k.sqr(a.c[i]);
    return r;
}

int Ring::sval(const SElem& a) const {
    for (int i = 0; i < NS; ++i)
        if (a.c[i]) return i;
    return NS;
}

SElem Ring::sinv(const SElem& a) const {
    if (!a.c[0]) throw Error(ErrKind::NotDivisible, "inverse of a non-unit in S");
    SElem r = szero();
    KElem inv0 = k.inv(a.c[0]);
    r.c[0] = inv0;
    for (int i = 1; i < NS; ++i) {
        KElem acc = 0;
        for (int j = 0; j < i; ++j)
            if (r.c[j] && a.c[i - j]) acc ^= k.mul(r.c[j], a.c[i - j]);
        r.c[i] = k.mul(acc, inv0); // char 2: -acc = acc
    }
    return r;
}

SElem Ring::sdiv_t_pow(const SElem& a, int r) const {
    for (int i = 0; i < r && i < NS; ++i)
        if (a.c[i]) throw Error(ErrKind::NotDivisible, "division by t^r in S");
    SElem q = szero();
    for (int i = r; i < NS; ++i) q.c[i - r] = a.c[i];
    return q;
}

// ------------------------------------------------------------------- kappa

OElem Ring::kappa_lift(const SElem& a) const {
    OElem r = ozero();
    for (int i = 0; i < 2 * e && i < NS; ++i) r.c[i] = wlift(a.c[i]);
    return r;
}

OElem Ring::kappa(const SElem& a) const { return oreduce_prec(kappa_lift(a), 2 * e); }

SElem Ring::kappa_inv(const OElem& a) const {
    if (a.prec < 2 * e)
        throw Error(ErrKind::PrecisionExhausted, "kappa_inv needs an element known mod 2");
    SElem r = szero();
    for (int i = 0; i < 2 * e && i < NS; ++i) r.c[i] = wred(a.c[i]);
    return r;
}

// ------------------------------------------------------------------- KPoly

KPoly kp_add(const Field& k, const KPoly& a, const KPoly& b) {
    KPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] ^= a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] ^= b.c[i];
    (void)k;
    return r;
}

KPoly kp_mul(const Field& k, const KPoly& a, const KPoly& b) {
    KPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size(), 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j]) r.c[i + j] ^= k.mul(a.c[i], b.c[j]);
    }
    return r;
}

KPoly kp_frob(const Field& k, const KPoly& a) {
    KPoly r;
    r.c.assign(2 * a.c.size(), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[2 * i] = k.sqr(a.c[i]);
    return r;
}

SElem kp_trunc(const RingPtr& R, const KPoly& a) {
    SElem r = R->szero();
    for (int i = 0; i < R->NS && i < (int)a.c.size(); ++i) r.c[i] = a.c[i];
    return r;
}

} // namespace period2
