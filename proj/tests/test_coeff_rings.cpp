#include "doctest.h"
#include "period2/rings.hpp"
#include <random>

using namespace period2;

static RingPtr R11() { return Ring::make(1, 1, 6, 8); }   // m=1, e=1
static RingPtr R22() { return Ring::make(2, 2, 6, 16); }  // m=2, e=2

TEST_CASE("field construction and irreducibility") {
    CHECK(poly_irreducible(0b111));   // z^2+z+1
    CHECK(!poly_irreducible(0b101));  // z^2+1 = (z+1)^2
    CHECK(default_modulus(2) == 0b111);
    Field f4(2, 0b111);
    KElem w = f4.gen();
    CHECK(f4.mul(w, w) == f4.add(w, 1)); // w^2 = w+1
    CHECK(f4.inv(w) == f4.mul(w, w));    // w^3 = 1
    CHECK(f4.sqrt(f4.sqr(w)) == w);
    CHECK_THROWS_AS(Field(2, 0b101), Error);
}

TEST_CASE("frobenius on S") {
    auto R = R11();
    // sigma(t) = t^2
    CHECK(R->sfrob(R->st(1)) == R->st(2));
    // sigma(1+t) = 1+t^2
    CHECK(R->sfrob(R->sadd(R->sone(), R->st(1))) == R->sadd(R->sone(), R->st(2)));
    // over F_4: sigma(w t) = (w+1) t^2, cross-checked against generic multiply
    auto R4 = Ring::make(2, 1, 6, 8);
    KElem w = R4->k.gen();
    SElem a = R4->smul_k(R4->st(1), w);
    CHECK(R4->sfrob(a) == R4->smul(a, a));
    CHECK(R4->sfrob(a).c[2] == R4->k.add(w, 1));
}

TEST_CASE("frobenius is a ring endomorphism of S") {
    auto R = Ring::make(2, 2, 6, 16);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        std::vector<KElem> ca(R->NS), cb(R->NS);
        for (auto& x : ca) x = rng() & 3;
        for (auto& x : cb) x = rng() & 3;
        SElem a = R->sfrom_coeffs(ca), b = R->sfrom_coeffs(cb);
        CHECK(R->sfrob(R->smul(a, b)) == R->smul(R->sfrob(a), R->sfrob(b)));
        CHECK(R->sfrob(R->sadd(a, b)) == R->sadd(R->sfrob(a), R->sfrob(b)));
        CHECK(R->sfrob(a) == R->smul(a, a));
    }
}

TEST_CASE("O arithmetic basics") {
    auto R = R11(); // E(x) = x^2 - 2, pi^2 = 2
    OElem pi = R->opi();
    CHECK(R->oeq(R->omul(pi, pi), R->ofrom_int(2)));
    // (1+pi)(1-pi) = 1 - 2 = -1
    OElem a = R->oadd(R->oone(), pi);
    OElem b = R->osub(R->oone(), pi);
    CHECK(R->oeq(R->omul(a, b), R->ofrom_int(-1)));
    // 1*a = a on random-ish elements
    CHECK(R->oeq(R->omul(R->oone(), a), a));
}

TEST_CASE("valuation semantics") {
    auto R = R11();
    CHECK(R->oval(R->ofrom_int(2)) == Val{2, false});  // v(2) = 2e = 2
    CHECK(R->oval(R->opi(3)) == Val{3, false});
    Val vz = R->oval(R->ozero(8));
    CHECK(vz.at_least);
    CHECK(vz.v == 8);
    auto R2 = R22();
    CHECK(R2->oval(R2->ofrom_int(2)) == Val{4, false}); // v(2) = 2e = 4
}

TEST_CASE("o_div2") {
    auto R = R11();
    CHECK(R->oeq(R->odiv2(R->ofrom_int(2)), R->oone()));
    CHECK(R->oeq(R->odiv2(R->omul(R->opi(), R->opi())), R->oone()));
    CHECK_THROWS_AS(R->odiv2(R->opi()), Error);
    // 2 * odiv2(a) = a whenever v(a) >= 2e
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        OElem x = R->ozero();
        for (auto& w : x.c)
            for (auto& d : w) d = rng() & R->wmask();
        OElem a = R->omul_int(x, 2);
        OElem back = R->omul_int(R->odiv2(a), 2);
        CHECK(R->osub(back, a).is_zero());
    }
}

TEST_CASE("division and inversion in O") {
    auto R = R22();
    OElem u = R->oadd(R->oone(), R->opi(3)); // unit
    CHECK(R->oeq(R->omul(u, R->oinv(u)), R->oone()));
    OElem a = R->omul(R->opi(5), u);
    CHECK(R->oeq(R->odiv(a, R->opi(5)), u));
    CHECK_THROWS_AS(R->odiv(R->opi(1), R->opi(2)), Error);
}

TEST_CASE("kappa_SO pins and homomorphism property") {
    auto R = R11();
    // kappa(t) = pi mod 2
    OElem kt = R->kappa(R->st(1));
    CHECK(kt.prec == 2 * R->e);
    CHECK(R->oeq(kt, R->oreduce_prec(R->opi(), 2)));
    // kappa(1) = 1 mod 2
    CHECK(R->oeq(R->kappa(R->sone()), R->oreduce_prec(R->oone(), 2)));
    // kappa(t + t^3) = pi + pi^3 for e = 2
    auto R2 = R22();
    SElem s = R2->sadd(R2->st(1), R2->st(3));
    CHECK(R2->oeq(R2->kappa(s), R2->oreduce_prec(R2->oadd(R2->opi(1), R2->opi(3)), 4)));

    // ring homomorphism on random pairs, all four (m,e) in {1,2}^2
    for (int m = 1; m <= 2; ++m) {
        for (int e = 1; e <= 2; ++e) {
            auto Rme = Ring::make(m, e, 6, 8 * e);
            std::mt19937_64 rng(100 * m + e);
            for (int it = 0; it < 100; ++it) {
                std::vector<KElem> ca(2 * e), cb(2 * e);
                for (auto& x : ca) x = rng() & (Rme->k.order() - 1);
                for (auto& x : cb) x = rng() & (Rme->k.order() - 1);
                SElem a = Rme->sfrom_coeffs(ca), b = Rme->sfrom_coeffs(cb);
                // products must be read modulo t^{2e} before mapping
                SElem ab = Rme->smul(a, b);
                for (int i = 2 * e; i < Rme->NS; ++i) ab.c[i] = 0;
                CHECK(Rme->oeq(Rme->kappa(ab), Rme->omul(Rme->kappa(a), Rme->kappa(b))));
                CHECK(Rme->oeq(Rme->kappa(Rme->sadd(a, b)),
                               Rme->oadd(Rme->kappa(a), Rme->kappa(b))));
            }
        }
    }
}

TEST_CASE("O/2O has k-dimension 2e and pi^{2e} = 0 mod 2") {
    for (int e = 1; e <= 2; ++e) {
        auto R = Ring::make(1, e, 6, 8 * e);
        OElem p2e = R->oreduce_prec(R->opi(2 * e), 2 * e);
        CHECK(p2e.is_zero());
        // the kappa-images of 1, t, .., t^{2e-1} are independent mod 2:
        // distinct pi-valuations 0..2e-1
        for (int i = 0; i < 2 * e; ++i) {
            Val v = R->oval(R->kappa(R->st(i)));
            CHECK(!v.at_least);
            CHECK(v.v == i);
        }
    }
}

TEST_CASE("tau conjugation") {
    auto R = R11();
    OElem a = R->oadd(R->oone(), R->opi());
    CHECK(R->oeq(R->otau(a), R->osub(R->oone(), R->opi())));
    CHECK(R->otau_invariant(R->ofrom_int(5)));
    CHECK(!R->otau_invariant(a));
    CHECK(R->otau_invariant(R->omul(R->opi(), R->opi()))); // pi_0 in O_0
}

TEST_CASE("custom Eisenstein polynomial validation") {
    // E(x) = x^2 - 2 explicit
    std::vector<std::vector<uint64_t>> eis = {{62}, {0}}; // -2 mod 64
    auto R = Ring::make(1, 1, 6, 8, &eis);
    CHECK(R->oeq(R->omul(R->opi(), R->opi()), R->ofrom_int(2)));
    // non-Eisenstein rejected: constant term odd
    std::vector<std::vector<uint64_t>> bad = {{1}, {0}};
    CHECK_THROWS_AS(Ring::make(1, 1, 6, 8, &bad), Error);
    // odd x-coefficient rejected (E must be a polynomial in x^2)
    std::vector<std::vector<uint64_t>> bad2 = {{62}, {2}};
    CHECK_THROWS_AS(Ring::make(1, 1, 6, 8, &bad2), Error);
}

TEST_CASE("exact polynomial helpers") {
    auto R = R11();
    KPoly a = KPoly::from_s(R->st(1));
    KPoly b = kp_frob(R->k, a); // t^2
    CHECK(b.deg() == 2);
    KPoly c = kp_mul(R->k, b, b);
    CHECK(c.deg() == 4);
    CHECK(kp_add(R->k, c, c).is_zero());
}
