#ifndef FEWNOMIAL_CURVE_HPP
#define FEWNOMIAL_CURVE_HPP

// Inflection/singularity condition systems for plane fewnomial curves: the
// curvature numerator d11 f (d2 f)^2 - 2 d12 f d1 f d2 f + d22 f (d1 f)^2,
// the per-class reduced conditions for trinomial curves, and the feature
// bounds feeding the line-intersection count I + V + 2.

#include <optional>
#include <stdexcept>
#include <vector>

#include "bounds.hpp"
#include "fewnomial.hpp"
#include "polygon.hpp"
#include "solver.hpp"

namespace fewnomial {

// every inflection point or singular point of {f = 0} in the open positive
// quadrant satisfies f = q = 0 for the returned q; the result is normalized by
// the minimal monomial that clears negative exponents
inline Fewnomial curvature_numerator(const Fewnomial& f) {
    if (f.n() != 2) throw std::invalid_argument("curvature_numerator: only bivariate supported");
    if (f.is_zero()) throw std::invalid_argument("curvature_numerator: zero polynomial");
    Fewnomial f1 = partial(f, 1), f2 = partial(f, 2);
    Fewnomial f11 = partial(f1, 1), f12 = partial(f1, 2), f22 = partial(f2, 2);
    Fewnomial q = add(add(multiply(f11, multiply(f2, f2)),
                          scale(multiply(f12, multiply(f1, f2)), -2.0)),
                      multiply(f22, multiply(f1, f1)));
    if (q.is_zero()) return q;
    ExponentVector clear(2, 0.0);
    for (const Term& t : q.terms())
        for (int j = 0; j < 2; ++j) clear[j] = std::max(clear[j], -t.exponent[j]);
    return multiply_monomial(q, 1.0, clear);
}

struct CurvatureSystem {
    Fewnomial f;
    Fewnomial q;
};

inline CurvatureSystem make_curvature_system(const Fewnomial& f) {
    return {f, curvature_numerator(f)};
}

// homogeneous polynomial in the non-constant monomials S1, S2;
// coeffs[i] multiplies S1^i S2^{degree - i}
struct SPoly {
    int degree = 0;
    std::vector<double> coeffs;
};

// The reduced inflection/singularity condition for f2 = 1 + S1 + S2 in the
// exponent normal form of each Minkowski class:
//   triangle       (a=d>0, b=c=0):    S1 + S2
//   quadrilateral  (b=c=0, a,d>0):    a(d-1) S1 - d(a-1) S2
//   pentagon       (b=0, a,c,d>0):    a^2(d-1) S1^2 + a(ad-d-2c) S1 S2 - c(c+d) S2^2
inline SPoly trinomial_inflection_condition(double a, double b, double c, double d,
                                            PolygonClass cls) {
    switch (cls) {
        case PolygonClass::Triangle:
            if (!(a == d && a > 0 && b == 0 && c == 0))
                throw std::invalid_argument("inflection condition: triangle form needs a=d>0, b=c=0");
            return {1, {1.0, 1.0}};  // S2 + S1
        case PolygonClass::Quadrilateral:
            if (!(b == 0 && c == 0 && a > 0 && d > 0))
                throw std::invalid_argument("inflection condition: quadrilateral form needs b=c=0, a,d>0");
            return {1, {-d * (a - 1), a * (d - 1)}};
        case PolygonClass::Pentagon:
            if (!(b == 0 && a > 0 && c > 0 && d > 0))
                throw std::invalid_argument("inflection condition: pentagon form needs b=0, a,c,d>0");
            return {2, {-c * (c + d), a * (a * d - d - 2 * c), a * a * (d - 1)}};
        default:
            throw std::invalid_argument("inflection condition: class must be triangle/quadrilateral/pentagon");
    }
}

enum class CurveFeature { Inflection, VerticalTangency };

struct FeatureBound {
    BigInt value = 0;
    bool finite = true;
    bool exact = false;
    std::string formula;
};

// m = 3 is exact (3 inflections, 1 vertical tangency); otherwise the Khovanski
// substitution K(2,m) bounds tangencies, and 3 K'(2,m) bounds
// singularities + inflections for m <= 3
inline FeatureBound feature_bound(CurveFeature kind, int m) {
    if (m < 1) throw std::invalid_argument("feature_bound: m must be >= 1");
    FeatureBound out;
    if (m == 3) {
        out.value = kind == CurveFeature::Inflection ? 3 : 1;
        out.exact = true;
        out.formula = "exact trinomial-curve value";
        return out;
    }
    if (kind == CurveFeature::VerticalTangency) {
        out.value = khovanski_bound(2, m);
        out.formula = "V(m) <= K(2,m), Khovanski substitution 3^m 2^{m(m-1)/2}";
        return out;
    }
    if (m < 3) {
        BoundReport kp = remark_kho_chain(2, m);
        out.value = 3 * kp.value;
        out.exact = out.value == 0;
        out.formula = "S(m)+I(m) <= 3 K'(2,m)";
        return out;
    }
    out.finite = false;
    out.formula = "no closed-form inflection bound implemented for m > 3";
    return out;
}

// maximum finite number of intersections of a line with a curve having at most
// I isolated inflections and V isolated vertical tangencies
inline long long line_curve_bound(long long I, long long V) {
    if (I < 0 || V < 0) throw std::invalid_argument("line_curve_bound: negative input");
    return I + V + 2;
}

// counts certified roots of (f, curvature numerator) when that pair fits the
// trinomial-pair pipeline; nullopt otherwise
inline std::optional<PipelineReport> isolated_feature_count(const Fewnomial& f,
                                                            const IsolationConfig& cfg) {
    Fewnomial q = curvature_numerator(f);
    if (q.is_zero() || f.term_count() > 3 || q.term_count() > 3) return std::nullopt;
    return solve_trinomial_pair(FewnomialSystem(2, {f, q}), cfg);
}

} // namespace fewnomial

#endif
