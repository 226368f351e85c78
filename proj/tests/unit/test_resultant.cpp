#include <catch2/catch_amalgamated.hpp>

#include "padicdyn/resultant.hpp"
#include "padicdyn/rng.hpp"

using namespace padicdyn;

static Poly from_longs(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.push_back(Rat(c));
    return Poly(std::move(v));
}

TEST_CASE("resultant values", "[resultant]") {
    CHECK(resultant(from_longs({-1, 0, 1}), from_longs({-2, 1})) == Rat(3));
    CHECK(resultant(from_longs({0, 1}), from_longs({0, 1})) == Rat(0));
    CHECK_THROWS(resultant(Poly(), from_longs({1})));
}

TEST_CASE("resultant equals product over roots", "[resultant][property]") {
    // A = lc * prod (z - r_i): Res(A, B) = lc^degB * prod B(r_i)
    Lcg64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        long n = rng.next_int(1, 4);
        Rat lc = rng.next_nonzero_rational(6);
        Poly A(lc);
        std::vector<Rat> roots;
        for (long i = 0; i < n; ++i) {
            roots.push_back(rng.next_rational(6));
            A = A * Poly(std::vector<Rat>{-roots.back(), Rat(1)});
        }
        long m = rng.next_int(0, 3);
        std::vector<Rat> bc(static_cast<size_t>(m) + 1);
        for (long i = 0; i <= m; ++i) bc[static_cast<size_t>(i)] = rng.next_rational(6);
        if (bc[static_cast<size_t>(m)] == 0) bc[static_cast<size_t>(m)] = Rat(1);
        Poly B(std::move(bc));

        Rat expected = Rat(1);
        for (long i = 0; i < B.degree(); ++i) expected *= lc;
        for (const auto& r : roots) expected *= B.eval(r);
        CHECK(resultant(A, B) == expected);
    }
}

TEST_CASE("resultant swap sign and gcd detection", "[resultant][property]") {
    Lcg64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        long n = rng.next_int(1, 4), m = rng.next_int(1, 4);
        std::vector<Rat> ac(static_cast<size_t>(n) + 1), bc(static_cast<size_t>(m) + 1);
        for (auto& c : ac) c = rng.next_rational(8);
        for (auto& c : bc) c = rng.next_rational(8);
        ac.back() = rng.next_nonzero_rational(8);
        bc.back() = rng.next_nonzero_rational(8);
        Poly A(std::move(ac)), B(std::move(bc));
        Rat rab = resultant(A, B);
        Rat rba = resultant(B, A);
        Rat sign = (A.degree() * B.degree()) % 2 == 0 ? Rat(1) : Rat(-1);
        CHECK(rab == sign * rba);
        CHECK((rab == 0) == !gcd(A, B).is_constant());
    }
    // engineered common factor
    Poly common = from_longs({3, 1});
    CHECK(resultant(common * from_longs({1, 1}), common * from_longs({2, 5})) == Rat(0));
}

TEST_CASE("remainder-sequence route matches the determinant route", "[resultant][property]") {
    Lcg64 rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        long n = rng.next_int(1, 6), m = rng.next_int(1, 6);
        std::vector<Rat> ac(static_cast<size_t>(n) + 1), bc(static_cast<size_t>(m) + 1);
        for (auto& c : ac) c = rng.next_rational(9);
        for (auto& c : bc) c = rng.next_rational(9);
        ac.back() = rng.next_nonzero_rational(9);
        bc.back() = rng.next_nonzero_rational(9);
        Poly A(std::move(ac)), B(std::move(bc));
        CHECK(resultant(A, B) == detail::resultant_sylvester(A, B));
    }
}

TEST_CASE("interpolation recovers polynomials", "[resultant]") {
    Poly p = from_longs({1, 0, -2, 7});
    std::vector<Rat> xs, ys;
    for (long i = 0; i <= 3; ++i) {
        xs.push_back(Rat(i));
        ys.push_back(p.eval(Rat(i)));
    }
    CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("resultant in Y on engineered critical values", "[resultant]") {
    // W = 1 - 3z^2, map z - z^3: roots of S are the two critical values
    Poly W = from_longs({1, 0, -3});
    Poly F = from_longs({0, 1, 0, -1});
    Poly S = resultant_in_y(W, Rat(0), F, Poly::one());
    CHECK(S.degree() == 2);
    // S(Y) = c (Y^2 - 4/27)
    Rat c = S[2];
    CHECK(c != 0);
    CHECK(S[1] == 0);
    CHECK(S[0] == c * make_rat(-4, 27));

    // constant W has no roots: S is a nonzero constant
    Poly Sc = resultant_in_y(Poly(Rat(-1)), Rat(0), from_longs({1}), from_longs({0, 1}));
    CHECK(Sc.degree() == 0);
    CHECK(Sc[0] != 0);

    // W = z, critical value 0 at the origin: S proportional to Y
    Poly Sz = resultant_in_y(from_longs({0, 1}), Rat(0), from_longs({0, 0, 1}), Poly::one());
    CHECK(Sz.degree() == 1);
    CHECK(Sz[0] == 0);
}
