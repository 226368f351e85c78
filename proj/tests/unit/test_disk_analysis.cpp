#include <catch2/catch_amalgamated.hpp>

#include "padicdyn/disk_analysis.hpp"
#include "padicdyn/generators.hpp"
#include "padicdyn/rng.hpp"

using namespace padicdyn;

static Poly from_longs(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.push_back(Rat(c));
    return Poly(std::move(v));
}

static RatMap q0_sample() {
    Poly base = from_longs({10, -9});
    return RatMap(base.pow(5), Poly::monomial(Rat(1), 3));
}

static RatMap q1_map() { return RatMap::polynomial(from_longs({0, 1, 0, -1})); }

static RatMap q2_map() {
    // z + z^2/2 - z^4/4 + 2 z^5
    return RatMap::polynomial(Poly(std::vector<Rat>{Rat(0), Rat(1), make_rat(1, 2), Rat(0),
                                                    make_rat(-1, 4), Rat(2)}));
}

TEST_CASE("pole distances", "[disk]") {
    PadicContext p3(3);
    CHECK(pole_distance(q0_sample(), Rat(1), p3) == Rat(0));
    CHECK(pole_distance(RatMap(Poly::one(), from_longs({-3, 1})), Rat(0), p3) == Rat(-1));
    CHECK(pole_distance(RatMap(Poly::one(), from_longs({-3, 0, 1})), Rat(0), p3) ==
          make_rat(-1, 2));
    CHECK_THROWS_AS(pole_distance(q1_map(), Rat(0), p3), precondition_error);
}

TEST_CASE("pole-or-preimage distances", "[disk]") {
    PadicContext p3(3), p2(2);
    CHECK(r_bullet_distance(q1_map(), Rat(0), p3) == Rat(0));
    CHECK(r_bullet_distance(q2_map(), Rat(0), p2) == Rat(-1));
    CHECK(r_bullet_distance(RatMap(Poly::one(), from_longs({0, 1})), Rat(1), p3) == Rat(0));
    // z^2 anchored at 0 has no second preimage of 0 and no pole
    CHECK_THROWS_AS(
        r_bullet_distance(RatMap::polynomial(from_longs({0, 0, 1})), Rat(0), p3),
        precondition_error);
}

TEST_CASE("series expansion", "[disk]") {
    PadicContext p3(3);
    {
        SeriesExpansion se = series_expand(q1_map(), Rat(0), p3, 3);
        CHECK(se.exact);
        REQUIRE(se.coeffs.size() == 4);
        CHECK(se.coeffs[0] == 0);
        CHECK(se.coeffs[1] == 1);
        CHECK(se.coeffs[2] == 0);
        CHECK(se.coeffs[3] == -1);
    }
    {
        RatMap geom(Poly::one(), from_longs({1, -1}));  // 1/(1-z)
        SeriesExpansion se = series_expand(geom, Rat(0), p3, 2);
        CHECK_FALSE(se.exact);
        CHECK(se.coeffs == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    }
    {
        SeriesExpansion se = series_expand(q0_sample(), Rat(1), p3, 1);
        CHECK(se.coeffs[0] == Rat(1));
        CHECK(se.coeffs[1] == Rat(-48));
    }
}

TEST_CASE("series tail certificate is sound", "[disk][property]") {
    Lcg64 rng(61);
    for (long p : {2L, 3L, 5L}) {
        PadicContext ctx(p);
        int done = 0;
        while (done < 35) {
            long dF = rng.next_int(1, 4), dG = rng.next_int(1, 3);
            Poly F = random_poly(rng, dF, 9), G = random_poly(rng, dG, 9);
            if (G.is_zero() || F.is_zero()) continue;
            if (!gcd(F, G).is_constant()) continue;  // normalization may collapse the degree
            RatMap Q(F, G);
            if (Q.degree() < 1 || Q.is_polynomial()) continue;
            if (Q.is_pole(Rat(0))) continue;
            const long N = 4;
            SeriesExpansion se = series_expand(Q, Rat(0), ctx, N);
            SeriesExpansion more = series_expand(Q, Rat(0), ctx, N + 10);
            for (long n = N + 1; n <= N + 10; ++n) {
                const Rat& a = more.coeffs[static_cast<size_t>(n)];
                if (a == 0) continue;
                CHECK(val(ctx, a) >= ValQ(se.tail_mv + Rat(n) * se.tail_radius));
            }
            ++done;
        }
    }
}

TEST_CASE("disk degrees", "[disk]") {
    PadicContext p3(3), p2(2);
    CHECK(disk_degree(q1_map(), Rat(0), p3, Rat(0), true) == 3);
    CHECK(disk_degree(q1_map(), Rat(0), p3, Rat(-1), true) == 1);
    // the sup of |a_n| p^{ns} over the anchored series of the quintic sample
    // is attained at n = 4 on the closed unit disk
    CHECK(disk_degree(q2_map(), Rat(0), p2, Rat(0), true) == 4);
}

TEST_CASE("disk degree equals anchored preimage count", "[disk][property]") {
    // dual route: the degree equals the number of zeros of the anchored
    // numerator in the disk (no poles inside)
    Lcg64 rng(67);
    for (long p : {2L, 3L, 5L}) {
        PadicContext ctx(p);
        int done = 0;
        while (done < 40) {
            long dF = rng.next_int(2, 4), dG = rng.next_int(0, 3);
            Poly F = random_poly(rng, dF, 9);
            Poly G = dG == 0 ? Poly::one() : random_poly(rng, dG, 9);
            if (F.is_zero() || G.is_zero()) continue;
            RatMap Q(F, G);
            if (Q.degree() < 2) continue;
            Rat z0 = rng.next_rational(5);
            if (Q.is_pole(z0)) continue;
            RatMap A = anchor(Q, z0);
            for (long s6 = -18; s6 <= 18; s6 += 3 + (done % 2)) {
                Rat sr = make_rat(s6, 6);
                bool pole_free_closed =
                    Q.is_polynomial() || pole_distance(Q, z0, ctx) > sr;
                if (!pole_free_closed) continue;
                for (bool closed : {true, false}) {
                    long dd = disk_degree(Q, z0, ctx, sr, closed);
                    long oracle = count_zeros_in_disk(A.num(), ctx, sr, closed);
                    CHECK(dd == oracle);
                }
            }
            ++done;
        }
    }
}

TEST_CASE("open disk degree with a pole on the boundary", "[disk]") {
    PadicContext p3(3);
    RatMap geom(Poly::one(), from_longs({1, -1}));  // 1/(1-z), pole at norm 1
    CHECK(disk_degree(geom, Rat(0), p3, Rat(0), false) == 1);
    CHECK_THROWS_AS(disk_degree(geom, Rat(0), p3, Rat(0), true), precondition_error);
    // two preimages inside, pole on the boundary
    RatMap m(from_longs({0, 0, 1}), from_longs({1, -1}));  // z^2/(1-z)
    CHECK(disk_degree(m, Rat(0), p3, Rat(0), false) == 2);
}

TEST_CASE("disk degree monotone, one near the center", "[disk][property]") {
    PadicContext p3(3);
    RatMap q = q1_map();
    long prev = 1;
    for (long s = -4; s <= 2; ++s) {
        long d = disk_degree(q, Rat(0), p3, Rat(s), true);
        CHECK(d >= prev);
        prev = d;
    }
    // derivative nonzero at the center: degree 1 strictly inside the first
    // critical/preimage radius
    CHECK(disk_degree(q, Rat(0), p3, Rat(-1), true) == 1);
}

TEST_CASE("univalence certificates", "[disk]") {
    PadicContext p3(3);
    CHECK(univalence_certificate(q1_map(), Rat(0), p3, Rat(-1)) ==
          Univalence::certified_univalent);
    CHECK(univalence_certificate(q1_map(), Rat(0), p3, Rat(0)) == Univalence::certified_not);
    // the square map is critical at the origin: never univalent there
    CHECK(univalence_certificate(RatMap::polynomial(from_longs({0, 0, 1})), Rat(0), p3,
                                 Rat(0)) == Univalence::certified_not);
    // moebius maps are univalent everywhere
    CHECK(univalence_certificate(RatMap(Poly::one(), from_longs({0, 1})), Rat(1), p3, Rat(5)) ==
          Univalence::certified_univalent);
}

TEST_CASE("certified univalent disks are injective on rational samples", "[disk][property]") {
    Lcg64 rng(71);
    PadicContext ctx(3);
    int done = 0;
    while (done < 30) {
        Poly F = random_poly(rng, rng.next_int(2, 4), 6);
        if (F.is_zero()) continue;
        RatMap Q = RatMap::polynomial(F);
        if (Q.degree() < 2) continue;
        Rat z0 = rng.next_rational(4);
        Rat s(-rng.next_int(0, 2));
        Univalence u = univalence_certificate(Q, z0, ctx, s);
        if (u != Univalence::certified_univalent) continue;
        // sample pairs in the closed disk |z - z0| <= 3^s
        for (int k = 0; k < 20; ++k) {
            Rat d1 = rng.next_rational(9) * pow_rat(3, 2);  // valuation >= ... filtered below
            Rat d2 = rng.next_rational(9) * pow_rat(3, 2);
            auto inside = [&](const Rat& d) {
                return d == 0 || val(ctx, d) >= ValQ(-s);
            };
            if (!inside(d1) || !inside(d2) || d1 == d2) continue;
            ProjPoint y1 = Q.eval(z0 + d1), y2 = Q.eval(z0 + d2);
            CHECK_FALSE(y1 == y2);
        }
        ++done;
    }
}
