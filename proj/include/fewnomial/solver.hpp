#ifndef FEWNOMIAL_SOLVER_HPP
#define FEWNOMIAL_SOLVER_HPP

// End-to-end pipelines. solve_trinomial_pair chains
// classify -> mixed-volume-zero shortcut -> canonicalize -> t/(1-t) reduction
// -> certified isolation -> interval backmap -> Jacobian certification,
// recording which closed-form bound was the binding one. solve_pyramidal
// makes one equation univariate by an orthogonal monomial map, isolates it,
// and back-substitutes root intervals recursively.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "certificate.hpp"
#include "config.hpp"
#include "fewnomial.hpp"
#include "polygon.hpp"
#include "transform.hpp"
#include "univariate.hpp"

namespace fewnomial {

struct NotPyramidalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootBox {
    Box box;
    CertStatus status = CertStatus::Unresolved;
};

struct PipelineReport {
    PolygonClass classification = PolygonClass::Point;
    long long applied_bound = 0;
    std::string bound_provenance;
    std::vector<RootBox> roots;
    int tail_unresolved = 0;  // undecided open-tail slivers with no finite box image
    bool complete = false;
    std::vector<std::string> trace;

    int certified_unique() const {
        int c = 0;
        for (const auto& r : roots) c += counts_as_unique(r.status);
        return c;
    }
    int unresolved_count() const {
        return static_cast<int>(roots.size()) - certified_unique() + tail_unresolved;
    }

    // [certified_unique, certified_unique + undecided], capped by the bound
    std::pair<long long, long long> count_range() const {
        long long lo = certified_unique();
        long long hi = static_cast<long long>(roots.size()) + tail_unresolved;
        if (applied_bound >= 0) hi = std::min(hi, applied_bound);
        return {lo, std::max(lo, hi)};
    }
};

// the 2k x 2k block family built from Haas's pair; k = 1 is the pair itself
inline FewnomialSystem haas_family(int k) {
    if (k < 1) throw std::invalid_argument("haas_family: k must be >= 1");
    const int n = 2 * k;
    std::vector<Fewnomial> polys;
    auto e = [&](int var, double p) {
        ExponentVector v(n, 0.0);
        v[var] = p;
        return v;
    };
    for (int blk = 0; blk < k; ++blk) {
        int u = 2 * blk, v = 2 * blk + 1;
        polys.emplace_back(n, std::vector<Term>{{1, e(u, 108)}, {1.1, e(v, 54)}, {-1.1, e(v, 1)}});
        polys.emplace_back(n, std::vector<Term>{{1, e(v, 108)}, {1.1, e(u, 54)}, {-1.1, e(u, 1)}});
    }
    return FewnomialSystem(n, std::move(polys));
}

namespace detail {

struct BoundCandidate {
    std::string provenance;
    long long value;
    int preference;  // lower wins ties
};

inline std::pair<long long, std::string> pick_bound(std::vector<BoundCandidate> v) {
    if (v.empty()) return {-1, "NONE"};
    std::sort(v.begin(), v.end(), [](const BoundCandidate& a, const BoundCandidate& b) {
        return a.value < b.value || (a.value == b.value && a.preference < b.preference);
    });
    return {v.front().value, v.front().provenance};
}

inline long long class_root_bound(PolygonClass c) {
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

// 5 when the partner is also a trinomial, else 2^m - 2
inline long long pair_cap(int m_other, bool both_trinomial) {
    if (both_trinomial) return 5;
    if (m_other >= 62) throw std::invalid_argument("pair_cap: partner too large");
    long long v = (1LL << m_other) - 2;
    return v > 0 ? v : 0;
}

// rewrite 1 + c1 T1 + c2 T2 as 1 - A t^a (1-t)^b - B t^c (1-t)^d by dividing
// by the odd-signed term; empty when both coefficients are positive (f > 0)
struct ABForm {
    double A, B, a, b, c, d;
};

inline std::optional<ABForm> normalize_to_ab(const TOneMinusTForm& f) {
    if (f.k() != 2) return std::nullopt;
    const double c1 = f.terms[0].c, c2 = f.terms[1].c;
    if (c1 < 0 && c2 < 0)
        return ABForm{-c1, -c2, f.terms[0].a, f.terms[0].b, f.terms[1].a, f.terms[1].b};
    if (c1 > 0 && c2 > 0) return std::nullopt;
    const int neg = c1 < 0 ? 0 : 1;
    const int pos = 1 - neg;
    return ABForm{-1.0 / f.terms[neg].c,
                  -f.terms[pos].c / f.terms[neg].c,
                  -f.terms[neg].a,
                  -f.terms[neg].b,
                  f.terms[pos].a - f.terms[neg].a,
                  f.terms[pos].b - f.terms[neg].b};
}

inline Box backmap_box(const CanonicalPair& cp, const Interval& t) {
    Box z{t, Interval::point(1.0) - t};
    return map_box(cp.to_original, z);
}

inline Box inflate_box(Box b) {
    for (auto& s : b) {
        double pad = std::max({4 * s.width(), 1e-9 * std::abs(s.mid()), 1e-11});
        s = Interval{s.lo - pad, s.hi + pad};
    }
    return b;
}

// Krawczyk contraction K(X) = m - Y F(m) + (I - Y J(X))(X - m); K(X) inside
// the interior of X certifies exactly one root in X and that it is
// nondegenerate. Y is the inverse of the midpoint Jacobian.
inline bool krawczyk_unique(const FewnomialSystem& F, const Box& X) {
    const int n = F.n;
    Box mbox(n);
    for (int i = 0; i < n; ++i) mbox[i] = Interval::point(X[i].mid());

    std::vector<Interval> Fm(n);
    std::vector<std::vector<Interval>> J(n, std::vector<Interval>(n));
    for (int i = 0; i < n; ++i) {
        Fm[i] = evaluate_interval(F.polys[i], mbox);
        for (int j = 0; j < n; ++j)
            J[i][j] = evaluate_interval(partial(F.polys[i], j + 1), X);
    }
    Eigen::MatrixXd Jm(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Jm(i, j) = J[i][j].mid();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(Jm);
    if (!lu.isInvertible()) return false;
    Eigen::MatrixXd Y = lu.inverse();

    for (int i = 0; i < n; ++i) {
        Interval k = Interval::point(X[i].mid());
        for (int j = 0; j < n; ++j) k = k - Y(i, j) * Fm[j];
        for (int j = 0; j < n; ++j) {
            Interval coeff = Interval::point(i == j ? 1.0 : 0.0);
            for (int l = 0; l < n; ++l) coeff = coeff - Y(i, l) * J[l][j];
            k = k + coeff * (X[j] - Interval::point(X[j].mid()));
        }
        if (!(k.lo > X[i].lo && k.hi < X[i].hi)) return false;
    }
    return true;
}

} // namespace detail

// ---- pyramidal back-substitution ----------------------------------------------

struct PyramidalResult {
    std::vector<RootBox> roots;
    bool complete = false;
    long long bound = 0;  // prod (m_i - 1)
};

namespace detail {

// boxes come back in the coordinates of F
inline void pyramidal_rec(const FewnomialSystem& F, const IsolationConfig& cfg,
                          std::vector<std::pair<Box, CertStatus>>& out, bool& complete,
                          int depth) {
    const int n = F.n;
    if (depth > 64) throw NotPyramidalError("pyramidal recursion too deep");
    for (const auto& f : F.polys) {
        if (f.is_zero()) {  // an equation vanished under substitution
            complete = false;
            return;
        }
        if (f.term_count() == 1) return;  // a monomial never vanishes on the orthant
    }

    if (n == 1) {
        std::vector<RealExpTerm> ts;
        for (const Term& t : F.polys[0].terms()) ts.push_back({t.coeff, t.exponent[0]});
        Isolation1D iso = isolate_positive_roots(RealExpPoly(std::move(ts)), cfg);
        complete = complete && iso.complete;
        for (const auto& c : iso.roots) {
            if (!std::isfinite(c.t.hi) || !(c.t.lo > 0)) {
                complete = false;
                continue;
            }
            out.push_back({Box{c.t}, c.status});
        }
        return;
    }

    // an equation whose support directions span one dimension becomes univariate
    int pivot = -1;
    Eigen::VectorXd w;
    for (int i = 0; i < n && pivot < 0; ++i) {
        Eigen::MatrixXd D = span_matrix(F, {i});
        if (numeric_rank(D, cfg.tau_rank) != 1) continue;
        pivot = i;
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(D, Eigen::ComputeFullV);
        w = svd.matrixV().col(0);
    }
    if (pivot < 0)
        throw NotPyramidalError("no equation reduces to one variable under a monomial map");

    // orthogonal map sending the span direction to the first coordinate
    Eigen::MatrixXd Q;
    {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(w);
        Q = qr.householderQ();
        if ((Eigen::VectorXd(Q.col(0)) - w).norm() > (Eigen::VectorXd(Q.col(0)) + w).norm())
            Q.col(0) = -Q.col(0);  // keep the first column aligned with w
    }
    MonomialMap M{Q, Eigen::VectorXd::Ones(n)};

    std::vector<Fewnomial> mapped;
    for (const auto& f : F.polys) mapped.push_back(apply_monomial_map(f, M, cfg.tau_rank));

    // the pivot's exponents must now lie on the first axis (up to fp noise)
    std::vector<RealExpTerm> uni;
    {
        const auto& ts = mapped[pivot].terms();
        double scale = 0;
        for (const auto& t : ts)
            for (double e : t.exponent) scale = std::max(scale, std::abs(e));
        for (const auto& t : ts) {
            for (int j = 1; j < n; ++j)
                if (std::abs(t.exponent[j] - ts[0].exponent[j]) > 1e-7 * (1 + scale))
                    throw NotPyramidalError("pivot equation failed to become univariate");
            uni.push_back({t.coeff, t.exponent[0] - ts[0].exponent[0]});
        }
    }
    Isolation1D iso = isolate_positive_roots(RealExpPoly(std::move(uni)), cfg);
    complete = complete && iso.complete;

    for (const auto& c : iso.roots) {
        if (!std::isfinite(c.t.hi) || !(c.t.lo > 0)) {
            complete = false;
            continue;
        }
        const double y1 = c.t.mid();
        // substitute the midpoint into the other equations and recurse
        std::vector<Fewnomial> rest;
        for (int i = 0; i < n; ++i) {
            if (i == pivot) continue;
            std::vector<Term> ts;
            for (const Term& t : mapped[i].terms()) {
                Term nt{t.coeff * std::pow(y1, t.exponent[0]),
                        ExponentVector(t.exponent.begin() + 1, t.exponent.end())};
                ts.push_back(std::move(nt));
            }
            rest.emplace_back(n - 1, std::move(ts));
        }
        std::vector<std::pair<Box, CertStatus>> child;
        bool child_complete = true;
        pyramidal_rec(FewnomialSystem(n - 1, std::move(rest)), cfg, child, child_complete, depth + 1);
        complete = complete && child_complete;
        for (auto& [cb, cs] : child) {
            Box y{c.t};
            y.insert(y.end(), cb.begin(), cb.end());
            CertStatus st = counts_as_unique(c.status) && counts_as_unique(cs)
                                ? CertStatus::UniqueNondegenerate
                                : CertStatus::Unresolved;
            out.push_back({map_box(M, y), st});
        }
    }
}

} // namespace detail

inline PyramidalResult solve_pyramidal(const FewnomialSystem& F, const IsolationConfig& cfg) {
    cfg.validate();
    if (F.k() != F.n) throw std::invalid_argument("solve_pyramidal: k != n");
    for (const auto& f : F.polys)
        if (f.is_zero()) throw std::invalid_argument("solve_pyramidal: zero polynomial");
    if (!is_pyramidal(F, cfg.tau_rank))
        throw NotPyramidalError("solve_pyramidal: system is not pyramidal");

    PyramidalResult res;
    res.bound = 1;
    for (const auto& f : F.polys) res.bound *= std::max(0, f.term_count() - 1);

    std::vector<std::pair<Box, CertStatus>> cand;
    bool complete = true;
    detail::pyramidal_rec(F, cfg, cand, complete, 0);

    // candidate boxes were built through midpoint substitution: inflate and
    // re-verify every one against the original system
    for (auto& [b, st] : cand) {
        Box ib = detail::inflate_box(b);
        bool all_contain_zero = true;
        for (const auto& f : F.polys)
            all_contain_zero = all_contain_zero && evaluate_interval(f, ib).contains_zero();
        if (!all_contain_zero) {  // spurious candidate
            complete = false;
            continue;
        }
        CertStatus st2 = CertStatus::Unresolved;
        if (counts_as_unique(st)) {
            if (detail::krawczyk_unique(F, ib) && interval_jacobian_nonsingular(F, ib))
                st2 = CertStatus::UniqueNondegenerate;
        }
        res.roots.push_back({ib, st2});
    }
    int unique = 0;
    for (const auto& r : res.roots) unique += counts_as_unique(r.status);
    if (unique > res.bound)
        throw std::logic_error("solve_pyramidal: count exceeds prod(m_i - 1)");
    res.complete = complete;
    for (const auto& r : res.roots)
        res.complete = res.complete && counts_as_unique(r.status);
    return res;
}

// ---- the (3,m) pair pipeline ---------------------------------------------------

inline PipelineReport solve_trinomial_pair(const FewnomialSystem& F, const IsolationConfig& cfg) {
    cfg.validate();
    if (F.n != 2 || F.k() != 2)
        throw std::invalid_argument("solve_trinomial_pair: need a 2x2 system");
    for (const auto& f : F.polys)
        if (f.is_zero()) throw std::invalid_argument("solve_trinomial_pair: zero polynomial");

    PipelineReport rep;
    const int m1 = F.polys[0].term_count();
    const int m2 = F.polys[1].term_count();
    const bool both_tri = m1 == 3 && m2 == 3;

    rep.classification = classify_pair(F);
    rep.trace.push_back(std::string("classify: ") + to_string(rep.classification));
    const bool mvz = mixed_volume_zero(F, cfg.tau_rank);
    const bool pyr = is_pyramidal(F, cfg.tau_rank);
    rep.trace.push_back(std::string("mixed_volume_zero: ") + (mvz ? "true" : "false"));
    rep.trace.push_back(std::string("pyramidal: ") + (pyr ? "true" : "false"));

    std::vector<detail::BoundCandidate> cands;
    if (m1 == 3 || m2 == 3)
        cands.push_back({"THM_TRI3", detail::pair_cap(m1 == 3 ? m2 : m1, both_tri), 1});
    if (both_tri) {
        bool hex = rep.classification == PolygonClass::HexagonOrMore;
        cands.push_back({hex ? "THM_TRI3" : "COR_POLY",
                         detail::class_root_bound(rep.classification), hex ? 1 : 0});
    }
    if (pyr) cands.push_back({"THM_TRI1", (long long)(m1 - 1) * (m2 - 1), 3});

    if (mvz) {
        rep.applied_bound = 0;
        rep.bound_provenance = "COR_ZERO";
        rep.complete = true;
        rep.trace.push_back("mixed volume zero: no isolated roots in the positive quadrant");
        return rep;
    }

    // pick a trinomial with a 2-dimensional Newton polygon to carry the reduction
    std::optional<CanonicalizeResult> canon;
    int canon_index = -1;
    for (int idx : {0, 1}) {
        if (F.polys[idx].term_count() != 3) continue;
        FewnomialSystem ordered(2, {F.polys[idx], F.polys[1 - idx]});
        CanonicalizeResult r = canonicalize_pair(ordered, cfg.tau_rank);
        if (r.status == CanonicalizeStatus::DegenerateNewton) continue;
        canon = std::move(r);
        canon_index = idx;
        break;
    }

    if (canon && canon->status == CanonicalizeStatus::SignObstruction) {
        rep.applied_bound = 0;
        rep.bound_provenance = "SIGN_OBSTRUCTION";
        rep.complete = true;
        rep.trace.push_back("sign obstruction: a member is sign-definite on the quadrant");
        return rep;
    }

    if (!canon) {
        if (!pyr) {
            auto [bv, bp] = detail::pick_bound(cands);
            rep.applied_bound = bv;
            rep.bound_provenance = bp;
            rep.complete = false;
            rep.trace.push_back("unsupported shape: no reduction path applies");
            return rep;
        }
        rep.trace.push_back("route: pyramidal back-substitution");
        PyramidalResult pr = solve_pyramidal(F, cfg);
        auto [bv, bp] = detail::pick_bound(cands);
        rep.applied_bound = bv;
        rep.bound_provenance = bp;
        rep.roots = std::move(pr.roots);
        rep.complete = pr.complete;
        if (rep.certified_unique() > rep.applied_bound)
            throw std::logic_error("solve_trinomial_pair: count exceeds the applied bound");
        return rep;
    }

    rep.trace.push_back("canonicalize: member " + std::to_string(canon_index) +
                        " -> 1 - x1 - x2");
    const CanonicalPair& cp = *canon->pair;
    TOneMinusTForm form = reduce_pair(cp);
    rep.trace.push_back("reduce: " + std::to_string(form.k()) + "-term t/(1-t) form");

    if (auto ab = detail::normalize_to_ab(form))
        cands.push_back({"LEMMA_BASIC",
                         certified_bound_trinomial(ab->A, ab->B, ab->a, ab->b, ab->c, ab->d), 2});

    auto [bound, prov] = detail::pick_bound(cands);
    rep.applied_bound = bound;
    rep.bound_provenance = prov;

    if (form.k() == 0) {  // second member reduced to the constant 1
        rep.complete = true;
        rep.trace.push_back("reduced form is the constant 1: no roots");
        return rep;
    }

    Isolation1D iso = isolate_roots(form, cfg);
    rep.trace.push_back("isolate: " + std::to_string(iso.certified_unique()) + " unique, " +
                        std::to_string(iso.unresolved()) + " undecided, " +
                        std::to_string(iso.subdivisions) + " subdivisions");

    // backmap; tighten t-intervals until the 2-d boxes are pairwise disjoint.
    // undecided tail slivers touching 0 or 1 have no finite image and are
    // carried as a count, not a box
    std::vector<Cert1D> certs;
    for (const auto& c : iso.roots) {
        if (c.t.lo > 0 && c.t.hi < 1) certs.push_back(c);
        else ++rep.tail_unresolved;
    }
    std::vector<Box> boxes;
    boxes.reserve(certs.size());
    for (const auto& c : certs) boxes.push_back(detail::backmap_box(cp, c.t));
    for (int iter = 0; iter < cfg.backmap_refine_iters; ++iter) {
        bool overlap = false;
        for (std::size_t i = 0; i < boxes.size() && !overlap; ++i)
            for (std::size_t j = i + 1; j < boxes.size() && !overlap; ++j)
                overlap = boxes_intersect(boxes[i], boxes[j]);
        if (!overlap) break;
        bool shrunk = false;
        for (auto& c : certs) {
            if (!counts_as_unique(c.status)) continue;
            Interval t = tighten_unique(form, c.t, c.t.width() / 4, cfg);
            if (t.width() < c.t.width()) {
                c.t = t;
                shrunk = true;
            }
        }
        if (!shrunk) break;
        boxes.clear();
        for (const auto& c : certs) boxes.push_back(detail::backmap_box(cp, c.t));
    }

    int jac_ok = 0;
    for (std::size_t i = 0; i < certs.size(); ++i) {
        CertStatus st = certs[i].status;
        if (counts_as_unique(st)) {
            if (interval_jacobian_nonsingular(F, boxes[i])) ++jac_ok;
            else st = CertStatus::PossiblyDegenerate;
        }
        rep.roots.push_back({boxes[i], st});
    }
    rep.trace.push_back("backmap + jacobian: " + std::to_string(jac_ok) + " of " +
                        std::to_string(certs.size()) + " boxes certified nondegenerate");

    rep.complete = iso.complete && rep.unresolved_count() == 0;
    if (rep.certified_unique() > rep.applied_bound)
        throw std::logic_error("solve_trinomial_pair: count exceeds the applied bound");
    return rep;
}

// ---- presentation wrapper --------------------------------------------------------

struct CountReport {
    long long certified_min = 0;
    long long certified_max = 0;
    long long applied_bound = -1;
    std::string bound_provenance = "NONE";
    bool complete = false;
    std::optional<PipelineReport> pipeline;  // set on the 2x2 route
};

inline CountReport count_report(const FewnomialSystem& F, const IsolationConfig& cfg) {
    CountReport out;
    if (F.n == 2 && F.k() == 2) {
        PipelineReport rep = solve_trinomial_pair(F, cfg);
        auto [lo, hi] = rep.count_range();
        out.certified_min = lo;
        out.certified_max = hi;
        out.applied_bound = rep.applied_bound;
        out.bound_provenance = rep.bound_provenance;
        out.complete = rep.complete;
        out.pipeline = std::move(rep);
        return out;
    }
    if (F.k() == F.n && is_pyramidal(F, cfg.tau_rank)) {
        PyramidalResult pr = solve_pyramidal(F, cfg);
        int unique = 0;
        for (const auto& r : pr.roots) unique += counts_as_unique(r.status);
        out.certified_min = unique;
        out.certified_max = std::min<long long>(pr.roots.size(), pr.bound);
        out.certified_max = std::max(out.certified_max, out.certified_min);
        out.applied_bound = pr.bound;
        out.bound_provenance = "THM_TRI1";
        out.complete = pr.complete;
        return out;
    }
    throw std::invalid_argument(
        "count_report: only 2x2 pairs and pyramidal n x n systems are supported");
}

} // namespace fewnomial

#endif
