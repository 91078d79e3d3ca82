#include <catch2/catch_amalgamated.hpp>

#include "fewnomial/parse.hpp"
#include "fewnomial/polygon.hpp"
#include "support/generators.hpp"

using namespace fewnomial;
using namespace testsupport;

namespace {
Fewnomial poly(const char* line, int vars = 2) {
    std::string text = "#: vars " + std::to_string(vars) + "\n" + line + "\n";
    return parse_system(text).system.polys[0];
}

bool has_vertex(const Polygon2& p, double x, double y) {
    for (const auto& v : p.vertices)
        if (std::abs(v.x - x) < 1e-9 && std::abs(v.y - y) < 1e-9) return true;
    return false;
}
} // namespace

TEST_CASE("newton polygons of the worked examples") {
    Polygon2 tri = newton_polygon(poly("1 - 1 x1^1 - 1 x2^1"));
    REQUIRE(tri.vertex_count() == 3);
    REQUIRE(has_vertex(tri, 0, 0));
    REQUIRE(has_vertex(tri, 1, 0));
    REQUIRE(has_vertex(tri, 0, 1));

    // collinear support collapses to a segment
    Polygon2 seg = newton_polygon(poly("1 x2^2 - 7 x2^1 + 12"));
    REQUIRE(seg.vertex_count() == 2);
    REQUIRE(has_vertex(seg, 0, 0));
    REQUIRE(has_vertex(seg, 0, 2));

    Polygon2 h = newton_polygon(poly("1 x1^108 + 1.1 x2^54 - 1.1 x2^1"));
    REQUIRE(h.vertex_count() == 3);
    REQUIRE(has_vertex(h, 108, 0));
    REQUIRE(has_vertex(h, 0, 54));
    REQUIRE(has_vertex(h, 0, 1));
}

TEST_CASE("hull is idempotent on its own vertices") {
    auto rng = make_rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        Polygon2 p = random_integer_polygon(rng);
        Polygon2 q = convex_hull(p.vertices);
        REQUIRE(same_polygon(p, q));
    }
}

TEST_CASE("minkowski sums of the worked examples") {
    Polygon2 a = minkowski_sum(newton_polygon(poly("1 x1^2 + 1 x2^2 - 25")),
                               newton_polygon(poly("1 x1^1 + 1 x2^1 - 7")));
    REQUIRE(a.vertex_count() == 3);
    REQUIRE(has_vertex(a, 0, 0));
    REQUIRE(has_vertex(a, 3, 0));
    REQUIRE(has_vertex(a, 0, 3));

    Polygon2 b = minkowski_sum(newton_polygon(poly("1 x2^2 - 7 x2^1 + 12")),
                               newton_polygon(poly("-1 + 1 x1^1 x2^1 - 1 x1^2")));
    REQUIRE(b.vertex_count() == 5);
    for (auto [x, y] : {std::pair{0.0, 0.0}, {2.0, 0.0}, {2.0, 2.0}, {1.0, 3.0}, {0.0, 2.0}})
        REQUIRE(has_vertex(b, x, y));

    Polygon2 c = minkowski_sum(newton_polygon(poly("1 x1^108 + 1.1 x2^54 - 1.1 x2^1")),
                               newton_polygon(poly("1 x2^108 + 1.1 x1^54 - 1.1 x1^1")));
    REQUIRE(c.vertex_count() == 6);
}

TEST_CASE("minkowski edge count equals distinct edge directions") {
    auto rng = make_rng(77);
    for (int trial = 0; trial < 1000; ++trial) {
        Polygon2 P = random_integer_polygon(rng);
        Polygon2 Q = random_integer_polygon(rng);
        Polygon2 fast = minkowski_sum(P, Q);
        Polygon2 slow = minkowski_bruteforce(P, Q);
        INFO("trial " << trial);
        REQUIRE(same_polygon(fast, slow, 1e-9));
        if (fast.vertex_count() >= 3)
            REQUIRE(fast.vertex_count() == distinct_edge_directions(P, Q));
    }
}

TEST_CASE("classification is invariant under monomial multiples") {
    auto rng = make_rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        FewnomialSystem F = random_trinomial_pair(rng);
        PolygonClass before = classify_pair(F);
        ExponentVector shift{uniform(rng, -3, 3), uniform(rng, -3, 3)};
        double c = uniform(rng, 0.5, 2.0);
        FewnomialSystem G(2, {multiply_monomial(F.polys[0], c, shift), F.polys[1]});
        REQUIRE(classify_pair(G) == before);
    }
}

TEST_CASE("mixed volume zero detection") {
    // two members univariate in x1
    FewnomialSystem both_x1(2, {poly("1 x1^2 - 3 x1^1 + 2"), poly("1 x1^1 - 1")});
    REQUIRE(mixed_volume_zero(both_x1));

    FewnomialSystem generic(2, {poly("1 x1^2 + 1 x2^2 - 25"), poly("1 x1^1 + 1 x2^1 - 7")});
    REQUIRE_FALSE(mixed_volume_zero(generic));

    FewnomialSystem both_x2(2, {poly("1 x2^2 - 7 x2^1 + 12"), poly("1 x2^1 - 1")});
    REQUIRE(mixed_volume_zero(both_x2));

    FewnomialSystem bad(2, {poly("1 x1^1 - 1")});
    REQUIRE_THROWS_AS(mixed_volume_zero(bad), std::invalid_argument);
}

TEST_CASE("pyramidal detection") {
    FewnomialSystem products(2, {poly("1 x1^2 - 3 x1^1 + 2"), poly("1 x2^2 - 3 x2^1 + 2")});
    REQUIRE(is_pyramidal(products));

    FewnomialSystem haas = haas_family(1);
    REQUIRE_FALSE(is_pyramidal(haas));

    FewnomialSystem chain(2, {poly("1 x1^1 - 2"), poly("1 x1^1 x2^1 - 1")});
    REQUIRE(is_pyramidal(chain));
}

TEST_CASE("edge initial-form root bounds") {
    Fewnomial simplex = poly("1 - 1 x1^1 - 1 x2^1");
    REQUIRE(edge_root_bound(simplex, {0, 1}) == 1);  // bottom edge: 1 - x1

    Fewnomial circle = poly("1 x1^2 + 1 x2^2 - 25");
    REQUIRE(edge_root_bound(circle, {1, 1}) == 0);  // edge between (2,0) and (0,2)

    Fewnomial pent = poly("1 + 1 x1^1 x2^1 - 1 x1^2");
    REQUIRE(edge_root_bound(pent, {-1, -1}) == 1);  // edge between (1,1) and (2,0)

    // a normal selecting a vertex is an error
    REQUIRE_THROWS_AS(edge_root_bound(simplex, {1, 2}), std::invalid_argument);
}

TEST_CASE("mixed volume zero implies a zero count on the fixtures") {
    IsolationConfig cfg;
    for (const char* second : {"1 x2^1 - 1", "1 x2^3 - 2 x2^1"}) {
        FewnomialSystem F(2, {poly("1 x2^2 - 7 x2^1 + 12"), poly(second)});
        if (!mixed_volume_zero(F)) continue;
        PipelineReport rep = solve_trinomial_pair(F, cfg);
        REQUIRE(rep.count_range() == std::pair<long long, long long>{0, 0});
    }
}
