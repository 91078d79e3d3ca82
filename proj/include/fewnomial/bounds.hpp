#ifndef FEWNOMIAL_BOUNDS_HPP
#define FEWNOMIAL_BOUNDS_HPP

// Closed-form root and component bounds as exact big-integer arithmetic, each
// tagged with its provenance and an exactness flag ("best known upper bound"
// vs "known exact value"). 2^{mu(mu-1)/2} overflows 64-bit already at mu = 12,
// hence cpp_int throughout.

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polygon.hpp"

namespace fewnomial {

using BigInt = boost::multiprecision::cpp_int;

enum class FormulaId {
    THM_TRI3,
    COR_POLY,
    KHOVANSKI,
    THM_TRI1,
    THM_COOL_COMP,
    THM_COOL_NONCOMP,
    COROLLARY_COMPONENTS,
    NEWROLLE,
};

inline const char* to_string(FormulaId f) {
    switch (f) {
        case FormulaId::THM_TRI3: return "THM_TRI3";
        case FormulaId::COR_POLY: return "COR_POLY";
        case FormulaId::KHOVANSKI: return "KHOVANSKI";
        case FormulaId::THM_TRI1: return "THM_TRI1";
        case FormulaId::THM_COOL_COMP: return "THM_COOL_COMP";
        case FormulaId::THM_COOL_NONCOMP: return "THM_COOL_NONCOMP";
        case FormulaId::COROLLARY_COMPONENTS: return "COROLLARY_COMPONENTS";
        case FormulaId::NEWROLLE: return "NEWROLLE";
    }
    return "?";
}

struct BoundReport {
    BigInt value = 0;
    bool finite = true;
    bool exact = false;  // false means UNKNOWN_EXACT: value is an upper bound
    FormulaId formula = FormulaId::KHOVANSKI;
    std::string inputs;
};

// (n+1)^mu * 2^{mu(mu-1)/2}: max nondegenerate positive roots of an n x n
// system with mu distinct exponent vectors
inline BigInt khovanski_bound(long long n, long long mu) {
    if (n < 1 || mu < 1) throw std::invalid_argument("khovanski_bound: need n, mu >= 1");
    BigInt base = n + 1;
    BigInt r = 1;
    for (long long i = 0; i < mu; ++i) r *= base;
    r <<= static_cast<unsigned>(mu * (mu - 1) / 2);
    return r;
}

// 5 exactly at m = 3; 2^m - 2 as an upper bound for m >= 4
inline BigInt trinomial_m_bound(int m) {
    if (m < 3) throw std::invalid_argument("trinomial_m_bound: m must be >= 3");
    if (m == 3) return 5;
    return (BigInt(1) << m) - 2;
}

// per-class maximum for a pair of bivariate trinomials
inline int polygon_class_bound(PolygonClass c) {
    switch (c) {
        case PolygonClass::Point:
        case PolygonClass::Segment: return 0;
        case PolygonClass::Triangle: return 2;
        case PolygonClass::Quadrilateral:
        case PolygonClass::Pentagon: return 4;
        case PolygonClass::HexagonOrMore: return 5;
    }
    return 5;
}

inline BigInt pyramidal_bound(const std::vector<long long>& type) {
    BigInt r = 1;
    for (long long m : type) {
        if (m < 1) throw std::invalid_argument("pyramidal_bound: m_i must be >= 1");
        r *= (m - 1);
    }
    return r;
}

// Best available bound on K'(n,m) (nondegenerate roots, m distinct exponent
// vectors), chaining Gaussian elimination to type (m-1,...,m-1) with the known
// exact small cases, against the direct Khovanski value.
inline BoundReport remark_kho_chain(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("remark_kho_chain: bad arguments");
    BoundReport rep;
    rep.inputs = "n=" + std::to_string(n) + ", m=" + std::to_string(m);
    if (m == 0) {
        rep.value = 0;
        rep.exact = true;
        rep.formula = FormulaId::KHOVANSKI;
        return rep;
    }
    if (n == 1) {  // univariate Descartes: exactly m - 1
        rep.value = m - 1;
        rep.exact = true;
        rep.formula = FormulaId::THM_TRI1;
        return rep;
    }
    if (m <= n) {
        // a monomial-scaled Jacobian with m distinct exponent vectors has rank
        // < n, so every root is degenerate
        rep.value = 0;
        rep.exact = true;
        rep.formula = FormulaId::KHOVANSKI;
        return rep;
    }
    BigInt kh = khovanski_bound(n, m);
    // elimination chain K'(n,m) <= N'(m-1,...,m-1), resolvable for small types;
    // with m > n this leaves exactly the two bivariate cases below
    BigInt chain = -1;
    FormulaId chain_id = FormulaId::THM_TRI1;
    bool chain_exact = false;
    if (n == 2 && m == 3) {
        chain = 1;  // binomial pairs: one positive root, attained by (x1-1, x2-1)
        chain_exact = true;
    } else if (n == 2 && m == 4) {
        chain = 5;  // via the exact trinomial-pair value
        chain_id = FormulaId::THM_TRI3;
    }
    if (chain >= 0 && chain < kh) {
        rep.value = chain;
        rep.formula = chain_id;
        rep.exact = chain_exact;
    } else {
        rep.value = kh;
        rep.formula = FormulaId::KHOVANSKI;
        rep.exact = false;
    }
    return rep;
}

struct ComponentBounds {
    BigInt compact;
    BigInt non_compact;
    bool compact_exact = false;
    bool non_compact_exact = false;
    std::string kprime_instantiation;
};

// P_comp(n,m) <= 2 ceil(K'(n,m)/2) with P_comp(1,m) = m-1;
// P_non(1,m) = [m == 0], P_non(2,m) <= ceil(m/2),
// P_non(n,m) <= 2 (P_comp(n-1,m) + P_non(n-1,m))
inline ComponentBounds component_bounds(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("component_bounds: bad arguments");
    ComponentBounds out;
    if (n == 1) {
        out.compact = m >= 1 ? m - 1 : 0;
        out.compact_exact = true;
        out.non_compact = m == 0 ? 1 : 0;
        out.non_compact_exact = true;
        out.kprime_instantiation = "base case";
        return out;
    }
    BoundReport kp = remark_kho_chain(n, m);
    out.compact = 2 * ((kp.value + 1) / 2);
    out.compact_exact = false;
    out.kprime_instantiation = std::string("K'(") + std::to_string(n) + "," +
                               std::to_string(m) + ") <= " + kp.value.str() + " via " +
                               to_string(kp.formula);
    if (n == 2) {
        out.non_compact = (m + 1) / 2;
    } else {
        ComponentBounds prev = component_bounds(n - 1, m);
        out.non_compact = 2 * (prev.compact + prev.non_compact);
    }
    out.non_compact_exact = false;
    return out;
}

// 2^{(m-1)(m-2)/2} * 2^{n-2} * n * (n+1)^{m-1} connected components
inline BigInt explicit_component_bound(int n, int m) {
    if (n < 2 || m < 1) throw std::invalid_argument("explicit_component_bound: need n >= 2, m >= 1");
    BigInt r = BigInt(1) << static_cast<unsigned>((m - 1) * (m - 2) / 2);
    r <<= static_cast<unsigned>(n - 2);
    r *= n;
    BigInt base = n + 1;
    for (int i = 0; i < m - 1; ++i) r *= base;
    return r;
}

} // namespace fewnomial

#endif
