#include <catch2/catch_amalgamated.hpp>

#include "padicdyn/ratmap.hpp"
#include "padicdyn/rng.hpp"

using namespace padicdyn;

static Poly from_longs(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.push_back(Rat(c));
    return Poly(std::move(v));
}

static RatMap q0_sample() {
    // (10 - 9z)^5 / z^3
    Poly base = from_longs({10, -9});
    return RatMap(base.pow(5), Poly::monomial(Rat(1), 3));
}

TEST_CASE("normalization", "[ratmap]") {
    RatMap a(from_longs({0, -1, 1}), from_longs({-1, 1}));  // (z^2-z)/(z-1)
    CHECK(a.num() == from_longs({0, 1}));
    CHECK(a.den() == Poly::one());

    RatMap b(from_longs({0, 2}), from_longs({2}));
    CHECK(b.num() == from_longs({0, 1}));
    CHECK(b.den() == Poly::one());

    RatMap c(Poly::monomial(Rat(1), 3), from_longs({0, 1}));
    CHECK(c.num() == from_longs({0, 0, 1}));

    CHECK_THROWS_AS(RatMap(from_longs({1, 1}), from_longs({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(RatMap(from_longs({2}), from_longs({1})), std::invalid_argument);
}

TEST_CASE("evaluation on the projective line", "[ratmap]") {
    CHECK(q0_sample().eval(Rat(1)) == ProjPoint::finite(Rat(1)));
    RatMap sq = RatMap::polynomial(from_longs({0, 0, 1}));
    CHECK(sq.eval(ProjPoint::infinity()) == ProjPoint::infinity());
    RatMap inv(Poly::one(), from_longs({0, 1}));
    CHECK(inv.eval(Rat(0)) == ProjPoint::infinity());
}

TEST_CASE("wronskian", "[ratmap]") {
    RatMap q1 = RatMap::polynomial(from_longs({0, 1, 0, -1}));
    CHECK(wronskian(q1) == from_longs({1, 0, -3}));
    CHECK(derivative(q1) == RatMap::polynomial(from_longs({1, 0, -3})));
    {
        RatMap inv(Poly::one(), from_longs({0, 1}));
        RatMap d = derivative(inv);
        CHECK(d.num() == from_longs({-1}));
        CHECK(d.den() == from_longs({0, 0, 1}));
    }
    RatMap inv(Poly::one(), from_longs({0, 1}));
    CHECK(wronskian(inv) == from_longs({-1}));
    RatMap q0 = q0_sample();
    Rat g1 = q0.den().eval(Rat(1));
    CHECK(wronskian(q0).eval(Rat(1)) / (g1 * g1) == Rat(-48));
}

TEST_CASE("shift and anchor", "[ratmap]") {
    RatMap sq = RatMap::polynomial(from_longs({0, 0, 1}));
    RatMap a = anchor(sq, Rat(1));
    CHECK(a.num() == from_longs({0, 2, 1}));
    CHECK(a.den() == Poly::one());

    RatMap q1 = RatMap::polynomial(from_longs({0, 1, 0, -1}));
    CHECK(anchor(q1, Rat(0)) == q1);

    RatMap inv(Poly::one(), from_longs({0, 1}));
    RatMap sh = shift(inv, Rat(1));
    CHECK(sh.den() == from_longs({1, 1}));
    CHECK_THROWS_AS(anchor(inv, Rat(0)), precondition_error);
}

TEST_CASE("inversion conjugation", "[ratmap]") {
    RatMap sq = RatMap::polynomial(from_longs({0, 0, 1}));
    CHECK(mobius_inversion_conjugate(sq, Rat(1), Rat(1)) == sq);
    RatMap idm = RatMap::polynomial(from_longs({0, 1}));
    CHECK(mobius_inversion_conjugate(idm, Rat(1), Rat(1)) == idm);
    RatMap s = RatMap::polynomial(from_longs({0, 1, 1}));  // z + z^2
    RatMap conj = mobius_inversion_conjugate(s, Rat(1), Rat(1));
    CHECK(conj.num() == from_longs({0, 0, 1}));
    CHECK(conj.den() == from_longs({1, 1}));

    // symbolic oracle: conj(z) = eta2 / Q(eta / z) at sample points
    Lcg64 rng(31);
    for (int i = 0; i < 40; ++i) {
        Rat eta = rng.next_nonzero_rational(7);
        Rat eta2 = rng.next_nonzero_rational(7);
        RatMap c2 = mobius_inversion_conjugate(s, eta, eta2);
        Rat z = rng.next_nonzero_rational(7);
        ProjPoint inner = s.eval(eta / z);
        if (inner.at_infinity || inner.value == 0) continue;
        CHECK(c2.eval(z) == ProjPoint::finite(eta2 / inner.value));
    }
}

TEST_CASE("composition and iteration", "[ratmap]") {
    RatMap sq = RatMap::polynomial(from_longs({0, 0, 1}));
    CHECK(iterate(sq, 2).num() == Poly::monomial(Rat(1), 4));
    RatMap q1 = RatMap::polynomial(from_longs({0, 1, 0, -1}));
    CHECK(iterate(q1, 1) == q1);
    RatMap inv(Poly::one(), from_longs({0, 1}));
    CHECK(compose(inv, inv) == RatMap::polynomial(from_longs({0, 1})));

    RatMap deg4 = RatMap::polynomial(Poly::monomial(Rat(1), 4));
    CHECK_THROWS_AS(iterate(deg4, 5), cap_exceeded);
}

TEST_CASE("composition agrees with pointwise evaluation", "[ratmap][property]") {
    Lcg64 rng(41);
    int done = 0;
    while (done < 100) {
        std::vector<Rat> f(4), g(3);
        for (auto& c : f) c = rng.next_rational(8);
        for (auto& c : g) c = rng.next_rational(8);
        f.back() = rng.next_nonzero_rational(8);
        g.back() = rng.next_nonzero_rational(8);
        Poly F(std::move(f)), G(std::move(g));
        if (!gcd(F, G).is_constant()) continue;
        RatMap A(F, G);
        RatMap B = RatMap::polynomial(from_longs({1, 0, 2}));
        RatMap C = compose(A, B);
        Rat z = rng.next_rational(8);
        ProjPoint inner = B.eval(z);
        if (inner.at_infinity) continue;
        ProjPoint lhs = C.eval(z);
        ProjPoint rhs = A.eval(inner.value);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("chain rule through the wronskian", "[ratmap][property]") {
    Lcg64 rng(43);
    int done = 0;
    while (done < 60) {
        std::vector<Rat> f(4);
        for (auto& c : f) c = rng.next_rational(6);
        f.back() = rng.next_nonzero_rational(6);
        Poly F(std::move(f));
        Poly G = from_longs({1, 0, 1});
        if (!gcd(F, G).is_constant()) continue;
        RatMap R(F, G);
        if (R.degree() < 2) continue;
        RatMap R2 = compose(R, R);
        Rat z = rng.next_rational(6);
        if (R.is_pole(z)) continue;
        ProjPoint mid = R.eval(z);
        if (mid.at_infinity || R.is_pole(mid.value)) continue;
        auto deriv_at = [](const RatMap& Q, const Rat& x) -> Rat {
            Rat g = Q.den().eval(x);
            return wronskian(Q).eval(x) / (g * g);
        };
        CHECK(deriv_at(R2, z) == deriv_at(R, mid.value) * deriv_at(R, z));
        ++done;
    }
}

TEST_CASE("reduction mod p", "[ratmap]") {
    PadicContext p3(3), p2(2);
    // z^3 - 3^5 z^5 reduces to the cube map: nontrivial, degree drops
    Poly P0 = Poly::monomial(Rat(1), 3) - Poly::monomial(pow_rat(3, 5), 5);
    Reduction r = reduce_mod_p(RatMap::polynomial(P0), p3);
    CHECK(r.defined);
    CHECK(r.nontrivial);
    CHECK(r.num == std::vector<long>{0, 0, 0, 1});
    CHECK_FALSE(r.degree_preserved);

    Reduction rsq = reduce_mod_p(RatMap::polynomial(from_longs({0, 0, 1})), p2);
    CHECK(rsq.good_reduction);

    Reduction rbad = reduce_mod_p(RatMap(from_longs({0, 1}), from_longs({2})), p2);
    CHECK_FALSE(rbad.defined);
}
