#include <catch2/catch_amalgamated.hpp>

#include "fewnomial/parse.hpp"
#include "support/generators.hpp"

using namespace fewnomial;
using namespace testsupport;

TEST_CASE("grammar basics") {
    SystemFile sf = parse_system("1 - 1 x1^1 - 1 x2^1\n");
    REQUIRE(sf.system.n == 2);
    REQUIRE(sf.system.polys[0] ==
            Fewnomial(2, {{1, {0, 0}}, {-1, {1, 0}}, {-1, {0, 1}}}));

    SystemFile haas = parse_system("1 x1^108 + 1.1 x2^54 - 1.1 x2^1\n");
    REQUIRE(haas.system.polys[0] ==
            Fewnomial(2, {{1, {108, 0}}, {1.1, {0, 54}}, {-1.1, {0, 1}}}));

    SystemFile mono = parse_system("1 x1^0.5\n");
    REQUIRE(mono.system.n == 1);
    REQUIRE(mono.system.polys[0] == Fewnomial(1, {{1, {0.5}}}));

    // negative and fractional exponents, repeated factors multiply out
    SystemFile neg = parse_system("2.5 x1^-0.5 x2^1.25 x1^2\n");
    REQUIRE(neg.system.polys[0] == Fewnomial(2, {{2.5, {1.5, 1.25}}}));
}

TEST_CASE("comments, metadata, and the vars directive") {
    SystemFile sf = parse_system(
        "# plain comment\n"
        "#: label haas\n"
        "#: expected_count 5\n"
        "#: vars 3\n"
        "1 x1^1 - 1   # trailing comment\n");
    REQUIRE(sf.system.n == 3);
    REQUIRE(sf.find_meta("label") != nullptr);
    REQUIRE(*sf.find_meta("label") == "haas");
    REQUIRE(*sf.find_meta("expected_count") == "5");
    REQUIRE(sf.find_meta("vars") == nullptr);  // folded into n
}

TEST_CASE("errors carry line and column") {
    try {
        parse_system("1 x1^2\n3 xq^1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.line == 2);
        REQUIRE(e.col == 3);
    }
    REQUIRE_THROWS_AS(parse_system("1 x1\n"), ParseError);      // missing '^'
    REQUIRE_THROWS_AS(parse_system("1 x0^2\n"), ParseError);    // bad index
    REQUIRE_THROWS_AS(parse_system("1 2 x1^1\n"), ParseError);  // missing sign
    REQUIRE_THROWS_AS(parse_system("x1^2\n"), ParseError);      // missing coefficient
}

TEST_CASE("round trip on random systems") {
    auto rng = make_rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + trial % 4;
        int k = 1 + trial % 3;
        std::vector<Fewnomial> polys;
        for (int i = 0; i < k; ++i) polys.push_back(random_fewnomial(rng, n, 1 + trial % 5, 6, 50));
        SystemFile sf;
        sf.system = FewnomialSystem(n, std::move(polys));
        if (trial % 2) sf.metadata.emplace_back("label", "case-" + std::to_string(trial));
        SystemFile back = parse_system(print_system(sf));
        REQUIRE(back.system.n == sf.system.n);
        REQUIRE(back.system.polys == sf.system.polys);
        REQUIRE(back.metadata == sf.metadata);
    }
}
