#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fewnomial/curve.hpp"
#include "fewnomial/parse.hpp"
#include "support/generators.hpp"

using namespace fewnomial;
using namespace testsupport;

namespace {
Fewnomial poly(const char* line, int vars = 2) {
    std::string text = "#: vars " + std::to_string(vars) + "\n" + line + "\n";
    return parse_system(text).system.polys[0];
}
} // namespace

TEST_CASE("a line has zero curvature numerator") {
    REQUIRE(curvature_numerator(poly("1 - 1 x1^1 - 1 x2^1")).is_zero());
    REQUIRE(curvature_numerator(poly("3 x1^1 - 2 x2^1")).is_zero());
}

TEST_CASE("the circle's curvature numerator is positive on the quadrant") {
    Fewnomial q = curvature_numerator(poly("1 x1^2 + 1 x2^2 - 25"));
    REQUIRE(q == poly("8 x1^2 + 8 x2^2"));
    Interval enc = evaluate_interval(q, {Interval{0.1, 50}, Interval{0.1, 50}});
    REQUIRE(enc.strictly_positive());
}

TEST_CASE("for a trinomial, q is a monomial times a cubic in (S1, S2)") {
    auto rng = make_rng(2718);
    for (int trial = 0; trial < 1000; ++trial) {
        double c1 = uniform(rng, 0.2, 3) * (trial % 2 ? 1 : -1);
        double c2 = uniform(rng, 0.2, 3) * (trial % 3 ? 1 : -1);
        double a1 = uniform(rng, -3, 3), b1 = uniform(rng, -3, 3);
        double a2 = uniform(rng, -3, 3), b2 = uniform(rng, -3, 3);
        Fewnomial f(2, {{1, {0, 0}}, {c1, {a1, b1}}, {c2, {a2, b2}}});
        Fewnomial q = curvature_numerator(f);
        if (q.is_zero()) continue;

        // independent cubic: with D1 f = (a1 S1 + a2 S2)/x1 etc., the numerator
        // x1^2 x2^2 q equals A2*(B1)^2 - 2*C*(A1)(B1) + B2*(A1)^2 where
        // A1 = a1 S1 + a2 S2, B1 = b1 S1 + b2 S2, A2 = a1(a1-1)S1 + a2(a2-1)S2,
        // B2 = b1(b1-1)S1 + b2(b2-1)S2, C = a1 b1 S1 + a2 b2 S2
        auto cubic = [&](double x, double y) {
            double S1 = c1 * std::pow(x, a1) * std::pow(y, b1);
            double S2 = c2 * std::pow(x, a2) * std::pow(y, b2);
            double A1 = a1 * S1 + a2 * S2, B1 = b1 * S1 + b2 * S2;
            double A2 = a1 * (a1 - 1) * S1 + a2 * (a2 - 1) * S2;
            double B2 = b1 * (b1 - 1) * S1 + b2 * (b2 - 1) * S2;
            double C = a1 * b1 * S1 + a2 * b2 * S2;
            return A2 * B1 * B1 - 2 * C * A1 * B1 + B2 * A1 * A1;
        };
        // the ratio q / cubic must be a monomial: log-linear in (log x, log y)
        double xs[3][2] = {{0.7, 1.3}, {1.9, 0.6}, {1.1, 2.2}};
        double e1, e2, lc;
        {
            Eigen::Matrix3d M;
            Eigen::Vector3d r;
            for (int i = 0; i < 3; ++i) {
                double x = xs[i][0], y = xs[i][1];
                double ratio = evaluate(q, {x, y}) / cubic(x, y);
                M(i, 0) = 1;
                M(i, 1) = std::log(x);
                M(i, 2) = std::log(y);
                r(i) = std::log(std::abs(ratio));
            }
            Eigen::Vector3d sol = M.fullPivLu().solve(r);
            lc = sol(0);
            e1 = sol(1);
            e2 = sol(2);
        }
        bool skip = false;
        for (double v : {lc, e1, e2}) skip = skip || !std::isfinite(v);
        if (skip) continue;  // a sample hit a zero of the cubic
        for (auto [x, y] : {std::pair{0.9, 1.7}, {2.3, 0.8}}) {
            double ratio = evaluate(q, {x, y}) / cubic(x, y);
            double pred = std::exp(lc + e1 * std::log(x) + e2 * std::log(y));
            if (!std::isfinite(ratio)) continue;
            INFO("trial " << trial);
            REQUIRE(std::abs(std::abs(ratio) - pred) <= 1e-6 * std::max(pred, 1e-12));
        }
    }
}

TEST_CASE("per-class inflection conditions match the quoted forms") {
    SPoly tri = trinomial_inflection_condition(2.5, 0, 0, 2.5, PolygonClass::Triangle);
    REQUIRE(tri.degree == 1);
    REQUIRE(tri.coeffs == std::vector<double>{1, 1});

    SPoly quad = trinomial_inflection_condition(2, 0, 0, 3, PolygonClass::Quadrilateral);
    REQUIRE(quad.coeffs == std::vector<double>{-3.0 * 1.0, 2.0 * 2.0});

    SPoly pent = trinomial_inflection_condition(2, 0, 1, 3, PolygonClass::Pentagon);
    REQUIRE(pent.degree == 2);
    REQUIRE(pent.coeffs == std::vector<double>{-1.0 * 4.0, 2.0 * (6 - 3 - 2), 4.0 * 2.0});

    REQUIRE_THROWS_AS(trinomial_inflection_condition(1, 1, 0, 1, PolygonClass::Triangle),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(trinomial_inflection_condition(1, 0, 0, 1, PolygonClass::HexagonOrMore),
                      std::invalid_argument);
}

TEST_CASE("triangle case: the condition pair is inconsistent") {
    // 1 + S1 + S2 = 0 and S1 + S2 = 0 force 1 = 0
    SPoly tri = trinomial_inflection_condition(2, 0, 0, 2, PolygonClass::Triangle);
    double s1 = 0.7, s2 = -s1;  // any point on {S1 + S2 = 0}
    REQUIRE(tri.coeffs[0] * s2 + tri.coeffs[1] * s1 == 0.0);
    REQUIRE(1 + s1 + s2 == 1.0);
}

TEST_CASE("feature bounds") {
    REQUIRE(feature_bound(CurveFeature::Inflection, 3).value == 3);
    REQUIRE(feature_bound(CurveFeature::Inflection, 3).exact);
    REQUIRE(feature_bound(CurveFeature::VerticalTangency, 3).value == 1);
    REQUIRE(feature_bound(CurveFeature::VerticalTangency, 4).value == khovanski_bound(2, 4));
    REQUIRE(feature_bound(CurveFeature::Inflection, 2).value == 0);
    REQUIRE_FALSE(feature_bound(CurveFeature::Inflection, 5).finite);

    REQUIRE(line_curve_bound(3, 1) == 6);
    REQUIRE(line_curve_bound(0, 0) == 2);
    REQUIRE(line_curve_bound(7, 5) == 14);
}

TEST_CASE("inflection of the mapped line is a root of (f, q)") {
    // the image of x1 + x2 - 1 under (x1,x2) -> (y1/y2, y1 y2) gains one
    // inflection in the quadrant, at y2 = sqrt(3)
    IsolationConfig cfg;
    Fewnomial f = poly("1 x1^1 x2^-1 + 1 x1^1 x2^1 - 1");
    Fewnomial q = curvature_numerator(f);
    REQUIRE(q.term_count() <= 3);

    auto rep = isolated_feature_count(f, cfg);
    REQUIRE(rep.has_value());
    REQUIRE(rep->certified_unique() == 1);
    const double y2 = std::sqrt(3.0), y1 = y2 / (1 + y2 * y2);
    REQUIRE(rep->roots[0].box[0].contains(y1));
    REQUIRE(rep->roots[0].box[1].contains(y2));

    // numeric necessity: the implicit curve y1(y2) = y2/(1+y2^2) changes the
    // sign of its second derivative across the root (sampling step 1e-4)
    auto second = [](double t) {
        double h = 1e-4;
        auto y = [](double s) { return s / (1 + s * s); };
        return (y(t + h) - 2 * y(t) + y(t - h)) / (h * h);
    };
    REQUIRE(second(y2 - 1e-2) * second(y2 + 1e-2) < 0);
}

TEST_CASE("no inflection candidates on the circle") {
    IsolationConfig cfg;
    auto rep = isolated_feature_count(poly("1 x1^2 + 1 x2^2 - 25"), cfg);
    REQUIRE(rep.has_value());
    REQUIRE(rep->count_range() == std::pair<long long, long long>{0, 0});
}
