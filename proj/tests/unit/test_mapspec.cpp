#include <catch2/catch_amalgamated.hpp>

#include "padicdyn/generators.hpp"
#include "padicdyn/mapspec.hpp"

using namespace padicdyn;

TEST_CASE("rational literals", "[mapspec]") {
    CHECK(parse_rational("-48") == Rat(-48));
    CHECK(parse_rational("9/25") == make_rat(9, 25));
    CHECK(parse_rational("-6/-4") == make_rat(3, 2));
    CHECK(rational_to_string(make_rat(-6, 4)) == "-3/2");
    CHECK(rational_to_string(Rat(7)) == "7");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("map spec parsing", "[mapspec]") {
    auto j = nlohmann::json::parse(R"({"p":3,"num":["0","1","0","-1"],"den":["1"],"z0":"0"})");
    MapSpec ms = MapSpec::from_json(j);
    CHECK(ms.p == 3);
    RatMap Q = ms.map();
    CHECK(Q.degree() == 3);
    CHECK(ms.z0_value() == Rat(0));

    CHECK_THROWS_AS(MapSpec::from_json(nlohmann::json::parse(R"({"num":[],"den":[]})")),
                    std::invalid_argument);
    auto bad = nlohmann::json::parse(R"({"p":3,"num":[1,2],"den":["1"]})");
    CHECK_THROWS_AS(MapSpec::from_json(bad), std::invalid_argument);
}

TEST_CASE("emitted rationals round trip", "[mapspec][property]") {
    Lcg64 rng(113);
    for (int i = 0; i < 300; ++i) {
        Rat q = rng.next_rational(1000);
        CHECK(parse_rational(rational_to_string(q)) == q);
    }
    // spec round trip through JSON
    PadicContext ctx(5);
    for (int i = 0; i < 20; ++i) {
        TheoremInstance inst = random_theorem_instance(rng, ctx, Theorem::E, 4, 9);
        MapSpec ms = MapSpec::from_map(ctx, inst.map, inst.z0);
        MapSpec back = MapSpec::from_json(ms.to_json());
        CHECK(back.map() == inst.map);
        CHECK(back.z0_value() == inst.z0);
    }
}

TEST_CASE("seeded generation is deterministic", "[mapspec][property]") {
    PadicContext ctx(3);
    for (Theorem t : {Theorem::C, Theorem::E}) {
        Lcg64 a(42), b(42);
        for (int i = 0; i < 10; ++i) {
            TheoremInstance x = random_theorem_instance(a, ctx, t, 4, 12);
            TheoremInstance y = random_theorem_instance(b, ctx, t, 4, 12);
            CHECK(x.map == y.map);
            CHECK(x.z0 == y.z0);
        }
    }
}
