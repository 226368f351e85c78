#include <catch2/catch_amalgamated.hpp>

#include "padicdyn/critical.hpp"
#include "padicdyn/generators.hpp"

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
    return RatMap::polynomial(Poly(std::vector<Rat>{Rat(0), Rat(1), make_rat(1, 2), Rat(0),
                                                    make_rat(-1, 4), Rat(2)}));
}

TEST_CASE("critical distance spectra", "[critical]") {
    PadicContext p3(3), p2(2), p5(5);
    {
        DistanceSpectrum ds = critical_distance_spectrum(q1_map(), Rat(0), p3);
        CHECK(ds.spectrum.multiplicity_of(ValQ(make_rat(-3, 2))) == 2);
        CHECK(ds.spectrum.total() == 2);
    }
    {
        DistanceSpectrum ds = critical_distance_spectrum(q2_map(), Rat(0), p2);
        CHECK(ds.spectrum.multiplicity_of(ValQ(Rat(-2))) == 3);
        CHECK(ds.spectrum.multiplicity_of(ValQ(Rat(-6))) == 1);
    }
    {
        DistanceSpectrum ds =
            critical_distance_spectrum(RatMap::polynomial(from_longs({0, 0, 1})), Rat(1), p5);
        CHECK(ds.spectrum.multiplicity_of(ValQ(Rat(0))) == 1);
        CHECK(ds.spectrum.total() == 1);
    }
}

TEST_CASE("spectrum accounts for every critical point", "[critical][property]") {
    Lcg64 rng(97);
    for (long p : {2L, 3L, 5L}) {
        PadicContext ctx(p);
        for (int trial = 0; trial < 40; ++trial) {
            TheoremInstance inst = random_theorem_instance(rng, ctx, Theorem::C, 4, 10);
            DistanceSpectrum ds = critical_distance_spectrum(inst.map, inst.z0, ctx);
            CHECK(ds.spectrum.total() + ds.at_poles + ds.at_infinity ==
                  2 * inst.map.degree() - 2);
        }
    }
}

TEST_CASE("spectrum matches direct evaluation on engineered maps", "[critical][property]") {
    // integrate (z - c1)(z - c2) to get rational critical points
    Lcg64 rng(101);
    PadicContext ctx(3);
    for (int trial = 0; trial < 50; ++trial) {
        Rat c1 = rng.next_rational(9), c2 = rng.next_rational(9);
        if (c1 == c2) continue;
        // Q' = (z-c1)(z-c2); Q = z^3/3 - (c1+c2) z^2/2 + c1 c2 z
        Poly Q(std::vector<Rat>{Rat(0), c1 * c2, -(c1 + c2) / 2, make_rat(1, 3)});
        RatMap m = RatMap::polynomial(Q);
        Rat z0 = rng.next_rational(9);
        ValSpectrum expected;
        expected.add(val(ctx, Q.eval(c1) - Q.eval(z0)), 1);
        expected.add(val(ctx, Q.eval(c2) - Q.eval(z0)), 1);
        DistanceSpectrum ds = critical_distance_spectrum(m, z0, ctx);
        CHECK(ds.spectrum == expected);
    }
}

TEST_CASE("bound certificates on the sharp families", "[critical]") {
    PadicContext p3(3), p2(2);
    {
        BoundCertificate c = verify_theorem_C(q0_sample(), Rat(1), p3);
        CHECK(c.holds);
        CHECK(c.equality);
        CHECK(c.lhsVal == ValQ(Rat(0)));
        CHECK(c.rhsVal == ValQ(Rat(0)));
    }
    {
        BoundCertificate c = verify_theorem_D(q0_sample(), Rat(1), p3);
        CHECK(c.holds);
        CHECK(c.rhsVal == ValQ(Rat(-3)));
    }
    {
        BoundCertificate c = verify_corollary_E(q1_map(), Rat(0), p3);
        CHECK(c.holds);
        CHECK(c.equality);
        CHECK(c.lhsVal == ValQ(make_rat(-3, 2)));
    }
    {
        BoundCertificate c = verify_corollary_E(q2_map(), Rat(0), p2);
        CHECK(c.holds);
        CHECK(c.equality);
        CHECK(c.lhsVal == ValQ(Rat(-2)));
        CHECK(c.rhsVal == ValQ(Rat(-2)));
    }
    {
        BoundCertificate c = verify_corollary_F(q1_map(), Rat(0), p3);
        CHECK(c.holds);
        CHECK(c.lhsVal == ValQ(make_rat(-3, 2)));
        CHECK(c.rhsVal == ValQ(Rat(-3)));
    }
    {
        BoundCertificate c = verify_corollary_F(q2_map(), Rat(0), p2);
        CHECK(c.holds);
        CHECK(c.rhsVal == ValQ(Rat(-9)));
    }
    {
        // unit instance: z^2 + z at 0 over Q_2
        BoundCertificate c =
            verify_corollary_F(RatMap::polynomial(from_longs({0, 1, 1})), Rat(0), p2);
        CHECK(c.holds);
    }
    {
        // desk instances for the strict and pole-distance bounds
        RatMap m1(Poly::monomial(Rat(1), 3), from_longs({-27, 1}));  // z^3/(z-27)
        CHECK(verify_theorem_C(m1, Rat(0), p3).holds);
        RatMap m2(Poly::monomial(Rat(1), 2), from_longs({-9, 1}));  // z^2/(z-9)
        CHECK(verify_theorem_D(m2, Rat(1), p3).holds);
        PadicContext p5x(5);
        CHECK(verify_corollary_E(RatMap::polynomial(from_longs({0, 0, 1})), Rat(1), p5x).holds);
    }
}

TEST_CASE("certificate preconditions are enforced", "[critical]") {
    PadicContext p3(3);
    CHECK_THROWS_AS(verify_theorem_C(q1_map(), Rat(0), p3), precondition_error);
    CHECK_THROWS_AS(verify_theorem_C(q0_sample(), Rat(0), p3), precondition_error);
    // z0 critical is fine for C (the bound is vacuous) but not for D and F
    RatMap m(from_longs({0, 0, 0, 1}), from_longs({1, 1}));  // z^3/(1+z), critical at 0
    CHECK_NOTHROW(verify_theorem_C(m, Rat(0), p3));
    CHECK(verify_theorem_C(m, Rat(0), p3).holds);
    CHECK_THROWS_AS(verify_theorem_D(m, Rat(0), p3), precondition_error);
    CHECK_THROWS_AS(verify_corollary_F(m, Rat(0), p3), precondition_error);
}

TEST_CASE("the loose bounds hold vacuously at a critical base point", "[critical]") {
    PadicContext p3(3);
    RatMap m(from_longs({0, 0, 0, 1}), from_longs({1, 1}));  // z^3/(1+z)
    BoundCertificate e = verify_corollary_E(m, Rat(0), p3);
    CHECK(e.holds);
    CHECK(e.lhsVal == ValQ::infinity());
    CHECK(e.rhsVal == ValQ::infinity());
}

TEST_CASE("small fuzz across all four bounds", "[critical][property]") {
    for (long p : {2L, 3L, 5L}) {
        PadicContext ctx(p);
        for (Theorem t : {Theorem::C, Theorem::D, Theorem::E, Theorem::F}) {
            Lcg64 rng(1000 + p + 10 * static_cast<long>(t));
            for (int trial = 0; trial < 60; ++trial) {
                TheoremInstance inst = random_theorem_instance(rng, ctx, t, 4, 20);
                BoundCertificate cert = run_theorem(inst, ctx, t);
                INFO("p=" << p << " theorem=" << theorem_name(t) << " trial=" << trial);
                CHECK(cert.holds);
            }
        }
    }
}

TEST_CASE("critical points in disks", "[critical]") {
    PadicContext p3(3), p2(2);
    CHECK(critical_points_in_disk(q1_map(), Rat(0), p3, make_rat(1, 2), true) == 2);
    CHECK(critical_points_in_disk(q1_map(), Rat(0), p3, Rat(0), true) == 0);
    CHECK(critical_points_in_disk(RatMap::polynomial(from_longs({0, 0, 1})), Rat(0), p3, Rat(0),
                                  true) == 1);
    CHECK(critical_points_in_disk(q2_map(), Rat(0), p2, Rat(0), true) == 3);
    // excluding critical points that map to Q(z0): the square map's origin
    CHECK(critical_points_in_disk(RatMap::polynomial(from_longs({0, 0, 1})), Rat(0), p3, Rat(0),
                                  true, true) == 0);
}

TEST_CASE("contraction forces a critical point in the disk", "[critical][property]") {
    // if the anchored map sends the open disk at s onto the open disk at s'
    // with degree m and val(Q'(z0)) > v_p(m) + s - s', a critical point sits
    // inside
    Lcg64 rng(107);
    for (long p : {2L, 3L}) {
        PadicContext ctx(p);
        int done = 0;
        int guard = 0;
        while (done < 25 && ++guard < 6000) {
            TheoremInstance inst = random_theorem_instance(rng, ctx, Theorem::C, 4, 8);
            Rat s(-rng.next_int(0, 3));
            if (!(pole_distance(inst.map, inst.z0, ctx) >= s)) continue;
            RatMap A = anchor(inst.map, inst.z0);
            long m = disk_degree(inst.map, inst.z0, ctx, s, false);
            Rat sImg = sup_norm_valuation(A.den(), ctx, s) - sup_norm_valuation(A.num(), ctx, s);
            ValQ dv = derivative_valuation_at(inst.map, inst.z0, ctx);
            if (!(dv > ValQ(Rat(val_int(ctx, Int(m))) + s - sImg))) continue;
            CHECK(critical_points_in_disk(inst.map, inst.z0, ctx, s, false) >= 1);
            ++done;
        }
        CHECK(done == 25);
    }
}

TEST_CASE("escape certificates", "[critical]") {
    PadicContext p3(3), p2(2);
    {
        Poly P0 = Poly::monomial(Rat(1), 3) - Poly::monomial(pow_rat(3, 5), 5);
        EscapeReport rep = escape_certificate(P0, p3);
        CHECK(rep.zero_critical_multiplicity == 2);
        CHECK(rep.zero_is_fixed);
        REQUIRE(rep.nonzero_classes.size() == 1);
        CHECK(rep.nonzero_classes[0].value_valuation == ValQ(Rat(-6)));
        CHECK(rep.nonzero_classes[0].multiplicity == 2);
        CHECK(rep.all_nonzero_escape());
        CHECK(rep.escape_log_radius == make_rat(5, 2));
    }
    {
        EscapeReport rep = escape_certificate(from_longs({0, 0, 1}), p2);
        CHECK(rep.zero_critical_multiplicity == 1);
        CHECK(rep.zero_is_fixed);
        CHECK(rep.nonzero_classes.empty());
    }
}
