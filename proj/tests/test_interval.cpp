#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fewnomial/fewnomial.hpp"
#include "support/generators.hpp"

using namespace fewnomial;
using testsupport::make_rng;
using testsupport::random_fewnomial;
using testsupport::uniform;

TEST_CASE("interval primitives enclose exact values") {
    Interval x{2.0, 3.0};
    Interval p = pow_i(x, 0.5);
    REQUIRE(p.lo <= std::sqrt(2.0));
    REQUIRE(p.hi >= std::sqrt(3.0));
    REQUIRE(p.hi - p.lo < 0.4);

    Interval e = exp_i(Interval{0.0, 1.0});
    REQUIRE(e.lo <= 1.0);
    REQUIRE(e.hi >= std::exp(1.0));

    Interval l = log_i(Interval::point(std::exp(1.0)));
    REQUIRE(l.contains(1.0));
    REQUIRE_THROWS_AS(log_i(Interval{0.0, 1.0}), std::domain_error);

    // closed-at-zero powers
    Interval z = pow_i_closed0(Interval{0.0, 0.25}, 0.5);
    REQUIRE(z.lo == 0.0);
    REQUIRE(z.hi >= 0.5);
    REQUIRE(pow_i_closed0(Interval{0.0, 0.25}, 0.0).contains(1.0));
    REQUIRE(std::isinf(pow_i_closed0(Interval{0.0, 0.25}, -1.0).hi));
}

TEST_CASE("multiplication covers all sign cases") {
    Interval a{-2.0, 3.0}, b{-5.0, 1.0};
    Interval p = a * b;
    // extreme products: -2*-5=10, -2*1=-2, 3*-5=-15, 3*1=3
    REQUIRE(p.lo <= -15.0);
    REQUIRE(p.hi >= 10.0);
    REQUIRE(p.lo >= -15.1);
    REQUIRE(p.hi <= 10.1);
}

TEST_CASE("enclosure soundness over random fewnomials") {
    auto rng = make_rng(20260810);
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 1 + static_cast<int>(trial % 3);
        Fewnomial f = random_fewnomial(rng, n, 1 + trial % 4, 6, 10);
        Box b(n);
        std::vector<double> x(n);
        for (int j = 0; j < n; ++j) {
            double lo = uniform(rng, 0.05, 3.0);
            double hi = lo + uniform(rng, 0.0, 2.0);
            b[j] = Interval{lo, hi};
            x[j] = uniform(rng, lo, hi);
        }
        double v = evaluate(f, x);
        Interval enc = evaluate_interval(f, b);
        REQUIRE(enc.lo <= v);
        REQUIRE(v <= enc.hi);
    }
}

TEST_CASE("log-space evaluation agrees with direct powering") {
    auto rng = make_rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + trial % 3;
        Fewnomial f = random_fewnomial(rng, n, 1 + trial % 4, 8, 10);
        std::vector<double> x(n);
        for (int j = 0; j < n; ++j) x[j] = uniform(rng, 0.5, 2.0);
        double direct = 0;
        for (const Term& t : f.terms()) {
            double term = t.coeff;
            for (int j = 0; j < n; ++j) term *= std::pow(x[j], t.exponent[j]);
            direct += term;
        }
        double logspace = evaluate(f, x);
        double scale = std::abs(direct) + 1.0;
        REQUIRE(std::abs(logspace - direct) <= 1e-12 * scale);
    }
}

TEST_CASE("shrinking the box never widens the enclosure") {
    auto rng = make_rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 1 + trial % 2;
        Fewnomial f = random_fewnomial(rng, n, 3, 5, 10);
        Box outer(n), inner(n);
        for (int j = 0; j < n; ++j) {
            double lo = uniform(rng, 0.1, 2.0);
            double hi = lo + uniform(rng, 0.1, 2.0);
            outer[j] = Interval{lo, hi};
            double w = hi - lo;
            inner[j] = Interval{lo + 0.25 * w, hi - 0.25 * w};
        }
        Interval o = evaluate_interval(f, outer);
        Interval i = evaluate_interval(f, inner);
        REQUIRE(o.lo <= i.lo);
        REQUIRE(i.hi <= o.hi);
    }
}

TEST_CASE("extended-precision intervals behave like the double ones") {
    using QI = BasicInterval<ExtendedFloat>;
    QI x{ExtendedFloat("2"), ExtendedFloat("3")};
    QI p = exp_i(QI::point(ExtendedFloat(1)) * log_i(x));
    REQUIRE(p.lo <= ExtendedFloat(2));
    REQUIRE(p.hi >= ExtendedFloat(3));
    REQUIRE(static_cast<double>(p.width().convert_to<double>()) < 1.1);
    // widening is far below double epsilon
    QI thin = log_i(QI::point(ExtendedFloat(2)));
    REQUIRE(thin.width().convert_to<double>() < 1e-30);
}
