#ifndef FEWNOMIAL_POLYGON_HPP
#define FEWNOMIAL_POLYGON_HPP

// Newton polygons of bivariate fewnomials, Minkowski sums by edge-direction
// merging, the segment/triangle/.../hexagon classification of a pair, and the
// two rank-based degeneracy tests (mixed volume zero, pyramidal shape).
//
// Supports carry real exponents, so all collinearity and direction comparisons
// are tolerance-based: 1e-12 on normalized directions, tau_rank (config) on
// singular values.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fewnomial.hpp"
#include "univariate.hpp"

namespace fewnomial {

struct Vec2 {
    double x = 0;
    double y = 0;
};

inline bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }

namespace detail {

inline double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double norm(double x, double y) { return std::hypot(x, y); }

constexpr double kDirTol = 1e-12;

inline bool same_direction(double ux, double uy, double vx, double vy) {
    double nu = norm(ux, uy), nv = norm(vx, vy);
    if (nu == 0 || nv == 0) return false;
    return std::abs(ux / nu - vx / nv) <= kDirTol && std::abs(uy / nu - vy / nv) <= kDirTol;
}

// normalized angle in [0, 2pi)
inline double edge_angle(double x, double y) {
    double a = std::atan2(y, x);
    if (a < 0) a += 2 * M_PI;
    return a;
}

} // namespace detail

// Strictly convex polygon, vertices counterclockwise starting at the lowest
// (then leftmost) vertex. Degenerates to a segment (2 vertices) or point (1).
struct Polygon2 {
    std::vector<Vec2> vertices;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

enum class PolygonClass { Point, Segment, Triangle, Quadrilateral, Pentagon, HexagonOrMore };

inline const char* to_string(PolygonClass c) {
    switch (c) {
        case PolygonClass::Point: return "POINT";
        case PolygonClass::Segment: return "SEGMENT";
        case PolygonClass::Triangle: return "TRIANGLE";
        case PolygonClass::Quadrilateral: return "QUADRILATERAL";
        case PolygonClass::Pentagon: return "PENTAGON";
        case PolygonClass::HexagonOrMore: return "HEXAGON_OR_MORE";
    }
    return "?";
}

inline PolygonClass classify_polygon(const Polygon2& p) {
    switch (p.vertex_count()) {
        case 1: return PolygonClass::Point;
        case 2: return PolygonClass::Segment;
        case 3: return PolygonClass::Triangle;
        case 4: return PolygonClass::Quadrilateral;
        case 5: return PolygonClass::Pentagon;
        default: return PolygonClass::HexagonOrMore;
    }
}

// Andrew monotone chain; collinear non-vertex points are dropped
inline Polygon2 convex_hull(std::vector<Vec2> pts) {
    if (pts.empty()) throw std::invalid_argument("convex_hull: empty point set");
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n == 1) return {{pts[0]}};

    double scale = 0;
    for (const auto& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const double tol = 1e-12 * scale * scale;

    std::vector<Vec2> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && detail::cross(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && detail::cross(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);  // last point repeats the first

    if (h.size() > 2) {
        // rotate so the walk starts at the lowest (then leftmost) vertex, CCW
        auto lowest = std::min_element(h.begin(), h.end(), [](const Vec2& a, const Vec2& b) {
            return a.y < b.y || (a.y == b.y && a.x < b.x);
        });
        std::rotate(h.begin(), lowest, h.end());
    } else if (h.size() == 2) {
        if (h[1].y < h[0].y || (h[1].y == h[0].y && h[1].x < h[0].x)) std::swap(h[0], h[1]);
    }
    return {std::move(h)};
}

inline Polygon2 newton_polygon(const Fewnomial& f) {
    if (f.n() != 2) throw std::invalid_argument("newton_polygon: only bivariate supported");
    if (f.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");
    std::vector<Vec2> pts;
    pts.reserve(f.terms().size());
    for (const Term& t : f.terms()) pts.push_back({t.exponent[0], t.exponent[1]});
    return convex_hull(std::move(pts));
}

namespace detail {

// CCW edge vectors; a segment contributes its direction and the reverse
inline std::vector<Vec2> edge_vectors(const Polygon2& p) {
    std::vector<Vec2> e;
    const auto& v = p.vertices;
    if (v.size() < 2) return e;
    if (v.size() == 2) {
        e.push_back({v[1].x - v[0].x, v[1].y - v[0].y});
        e.push_back({v[0].x - v[1].x, v[0].y - v[1].y});
        return e;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        e.push_back({b.x - a.x, b.y - a.y});
    }
    return e;
}

} // namespace detail

// Minkowski sum by merging the two edge sequences in angular order; parallel
// edges fuse, so the result's edge count is the number of distinct outward
// edge directions of the summands.
inline Polygon2 minkowski_sum(const Polygon2& P, const Polygon2& Q) {
    if (P.vertices.empty() || Q.vertices.empty())
        throw std::invalid_argument("minkowski_sum: empty polygon");
    auto translate = [](const Polygon2& poly, const Vec2& d) {
        Polygon2 r = poly;
        for (auto& v : r.vertices) {
            v.x += d.x;
            v.y += d.y;
        }
        return r;
    };
    if (P.vertex_count() == 1) return translate(Q, P.vertices[0]);
    if (Q.vertex_count() == 1) return translate(P, Q.vertices[0]);

    auto bottom = [](const Polygon2& poly) {
        return *std::min_element(poly.vertices.begin(), poly.vertices.end(),
                                 [](const Vec2& a, const Vec2& b) {
                                     return a.y < b.y || (a.y == b.y && a.x < b.x);
                                 });
    };
    // both edge lists start at the bottom vertex, so angles increase in [0, 2pi)
    auto edges_from_bottom = [&](const Polygon2& poly) {
        Polygon2 r = poly;
        if (r.vertex_count() > 2) {
            auto lowest = std::min_element(r.vertices.begin(), r.vertices.end(),
                                           [](const Vec2& a, const Vec2& b) {
                                               return a.y < b.y || (a.y == b.y && a.x < b.x);
                                           });
            std::rotate(r.vertices.begin(), lowest, r.vertices.end());
        }
        return detail::edge_vectors(r);
    };
    std::vector<Vec2> ep = edges_from_bottom(P);
    std::vector<Vec2> eq = edges_from_bottom(Q);

    Vec2 start{bottom(P).x + bottom(Q).x, bottom(P).y + bottom(Q).y};
    std::vector<Vec2> dirs;
    std::size_t i = 0, j = 0;
    while (i < ep.size() || j < eq.size()) {
        Vec2 take;
        if (i < ep.size() && j < eq.size() &&
            detail::same_direction(ep[i].x, ep[i].y, eq[j].x, eq[j].y)) {
            take = {ep[i].x + eq[j].x, ep[i].y + eq[j].y};
            ++i;
            ++j;
        } else if (j == eq.size() ||
                   (i < ep.size() && detail::edge_angle(ep[i].x, ep[i].y) <=
                                         detail::edge_angle(eq[j].x, eq[j].y))) {
            take = ep[i++];
        } else {
            take = eq[j++];
        }
        if (!dirs.empty() && detail::same_direction(dirs.back().x, dirs.back().y, take.x, take.y)) {
            dirs.back().x += take.x;
            dirs.back().y += take.y;
        } else {
            dirs.push_back(take);
        }
    }

    std::vector<Vec2> verts;
    Vec2 cur = start;
    for (std::size_t e = 0; e + 1 < dirs.size(); ++e) {  // last edge closes the loop
        verts.push_back(cur);
        cur = {cur.x + dirs[e].x, cur.y + dirs[e].y};
    }
    verts.push_back(cur);
    return convex_hull(std::move(verts));  // canonicalizes orientation and drops slivers
}

inline PolygonClass classify_pair(const FewnomialSystem& F) {
    if (F.n != 2 || F.k() != 2) throw std::invalid_argument("classify_pair: need a 2x2 system");
    return classify_polygon(minkowski_sum(newton_polygon(F.polys[0]), newton_polygon(F.polys[1])));
}

// ---- rank-based degeneracy tests ------------------------------------------------

namespace detail {

// rows = exponent differences of the supports of the chosen polynomials
inline Eigen::MatrixXd span_matrix(const FewnomialSystem& F, const std::vector<int>& which) {
    long rows = 0;
    for (int i : which) rows += std::max(0, F.polys[i].term_count() - 1);
    Eigen::MatrixXd M(rows, F.n);
    long r = 0;
    for (int i : which) {
        const auto& ts = F.polys[i].terms();
        for (std::size_t t = 1; t < ts.size(); ++t) {
            for (int j = 0; j < F.n; ++j) M(r, j) = ts[t].exponent[j] - ts[0].exponent[j];
            ++r;
        }
    }
    return M;
}

inline int numeric_rank(const Eigen::MatrixXd& M, double tau) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0) return 0;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i) r += sv(i) > tau * sv(0);
    return r;
}

} // namespace detail

// True iff some d in {0,..,n-1} admits a d-dimensional subspace containing
// translates of at least d+1 of the Newton polytopes; equivalently, some
// subset S of polynomials whose pooled exponent differences have rank < |S|.
inline bool mixed_volume_zero(const FewnomialSystem& F, double tau = 1e-9) {
    if (F.k() != F.n) throw std::invalid_argument("mixed_volume_zero: k != n");
    if (F.n > 20) throw std::invalid_argument("mixed_volume_zero: n too large");
    for (const auto& f : F.polys)
        if (f.is_zero()) throw std::invalid_argument("mixed_volume_zero: zero polynomial");
    for (unsigned mask = 1; mask < (1u << F.n); ++mask) {
        std::vector<int> which;
        for (int i = 0; i < F.n; ++i)
            if (mask & (1u << i)) which.push_back(i);
        int r = detail::numeric_rank(detail::span_matrix(F, which), tau);
        if (r < static_cast<int>(which.size()) && r <= F.n - 1) return true;
    }
    return false;
}

// The supports' linear spans L_i must satisfy, for every i: either L_i strictly
// contains all other L_j, or some L_j sticks one dimension out of L_i
// (dim(L_i + L_j) = dim L_i + 1).
inline bool is_pyramidal(const FewnomialSystem& F, double tau = 1e-9) {
    if (F.k() != F.n) throw std::invalid_argument("is_pyramidal: k != n");
    const int n = F.n;
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i)
        rank[i] = detail::numeric_rank(detail::span_matrix(F, {i}), tau);
    auto pair_rank = [&](int i, int j) {
        return detail::numeric_rank(detail::span_matrix(F, {i, j}), tau);
    };
    for (int i = 0; i < n; ++i) {
        bool contains_all = true;
        for (int j = 0; j < n && contains_all; ++j) {
            if (j == i) continue;
            contains_all = pair_rank(i, j) == rank[i] && rank[j] < rank[i];
        }
        if (contains_all && n > 1) continue;
        bool sticks_out = false;
        for (int j = 0; j < n && !sticks_out; ++j) {
            if (j == i) continue;
            sticks_out = pair_rank(i, j) == rank[i] + 1;
        }
        if (!sticks_out && n > 1) return false;
    }
    return true;
}

// ---- edge initial forms ----------------------------------------------------------

// Restricts the initial form of f at the edge selected by inner normal w to the
// edge direction and returns its Descartes bound. Errors when w selects a vertex.
inline int edge_root_bound(const Fewnomial& f, const Vec2& w) {
    if (f.n() != 2) throw std::invalid_argument("edge_root_bound: only bivariate supported");
    if (f.is_zero()) throw std::invalid_argument("edge_root_bound: zero polynomial");
    double m = std::numeric_limits<double>::infinity();
    double spread = 0;
    for (const Term& t : f.terms()) {
        double ip = t.exponent[0] * w.x + t.exponent[1] * w.y;
        m = std::min(m, ip);
        spread = std::max(spread, std::abs(ip));
    }
    const double tol = 1e-9 * (1 + spread);
    std::vector<const Term*> face;
    for (const Term& t : f.terms()) {
        double ip = t.exponent[0] * w.x + t.exponent[1] * w.y;
        if (ip - m <= tol) face.push_back(&t);
    }
    if (face.size() < 2)
        throw std::invalid_argument("edge_root_bound: w selects a vertex, not an edge");

    // direction along the face, from the two extreme points
    const Term* a0 = face.front();
    double ux = 0, uy = 0;
    for (const Term* t : face) {
        double dx = t->exponent[0] - a0->exponent[0];
        double dy = t->exponent[1] - a0->exponent[1];
        if (detail::norm(dx, dy) > detail::norm(ux, uy)) {
            ux = dx;
            uy = dy;
        }
    }
    double nu = detail::norm(ux, uy);
    ux /= nu;
    uy /= nu;
    std::vector<RealExpTerm> terms;
    terms.reserve(face.size());
    for (const Term* t : face) {
        double lam = (t->exponent[0] - a0->exponent[0]) * ux + (t->exponent[1] - a0->exponent[1]) * uy;
        terms.push_back({t->coeff, lam});
    }
    return descartes_bound(RealExpPoly(std::move(terms)));
}

} // namespace fewnomial

#endif
