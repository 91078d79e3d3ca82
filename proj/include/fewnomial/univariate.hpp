#ifndef FEWNOMIAL_UNIVARIATE_HPP
#define FEWNOMIAL_UNIVARIATE_HPP

// Univariate machinery on (0,1) and (0,inf): generalized Descartes counting
// for real exponents, the t/(1-t) reduction of a canonical pair, derivative
// cascades, the two bound cubics, and certified root isolation by adaptive
// bisection with interval arithmetic.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "certificate.hpp"
#include "config.hpp"
#include "interval.hpp"
#include "transform.hpp"

namespace fewnomial {

// ---- sign counting -----------------------------------------------------------

// number of pairs of consecutive nonzero entries with opposite signs (zeros skipped)
inline int sign_alternations(const std::vector<double>& c) {
    int count = 0;
    int prev = 0;
    for (double v : c) {
        if (v == 0) continue;
        int s = v > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

struct RealExpTerm {
    double c = 0;
    double e = 0;
};

// sum c_i t^{e_i}, exponents strictly increasing after construction
struct RealExpPoly {
    std::vector<RealExpTerm> terms;

    RealExpPoly() = default;
    explicit RealExpPoly(std::vector<RealExpTerm> t) : terms(std::move(t)) {
        std::sort(terms.begin(), terms.end(),
                  [](const RealExpTerm& a, const RealExpTerm& b) { return a.e < b.e; });
        std::vector<RealExpTerm> merged;
        for (const auto& x : terms) {
            if (!std::isfinite(x.c) || !std::isfinite(x.e))
                throw std::invalid_argument("RealExpPoly: non-finite entry");
            if (x.c == 0) continue;
            if (!merged.empty() && merged.back().e == x.e) {
                merged.back().c += x.c;
                if (merged.back().c == 0) merged.pop_back();
            } else {
                merged.push_back(x);
            }
        }
        terms = std::move(merged);
    }
};

// upper bound on the number of roots in (0,inf), sharp over all coefficient choices
inline int descartes_bound(const RealExpPoly& p) {
    std::vector<double> c;
    c.reserve(p.terms.size());
    for (const auto& t : p.terms) c.push_back(t.c);
    return sign_alternations(c);
}

// ---- the t/(1-t) normal form ---------------------------------------------------

struct FormTerm {
    double c = 0;
    double a = 0;
    double b = 0;
};

// f(t) = 1 + sum_i c_i t^{a_i} (1-t)^{b_i} on the open interval (0,1)
struct TOneMinusTForm {
    std::vector<FormTerm> terms;
    int k() const { return static_cast<int>(terms.size()); }
};

// substitute x2 = 1 - x1 into the canonical second polynomial; roots of the
// result in (0,1) biject with the pair's roots in the open positive quadrant
inline TOneMinusTForm reduce_pair(const CanonicalPair& cp) {
    TOneMinusTForm f;
    f.terms.reserve(cp.f2_terms.size());
    for (const auto& t : cp.f2_terms) f.terms.push_back({t.c, t.a, t.b});
    return f;
}

// 2^{k+1} - 2 for a k-term form (k >= 1); at k = 1 this gives the safe value 2
inline long long rolle_root_bound(int k) {
    if (k < 1) throw std::invalid_argument("rolle_root_bound: k must be >= 1");
    if (k > 61) throw std::invalid_argument("rolle_root_bound: k too large");
    return (1LL << (k + 1)) - 2;
}

// ---- evaluation ----------------------------------------------------------------

template <class F>
BasicInterval<F> eval_form(const TOneMinusTForm& form, const BasicInterval<F>& t) {
    const BasicInterval<F> one_minus = BasicInterval<F>::point(F(1)) - t;
    const BasicInterval<F> lt = log_i(t);
    const BasicInterval<F> lm = log_i(one_minus);
    BasicInterval<F> acc = BasicInterval<F>::point(F(1));
    for (const auto& term : form.terms) {
        BasicInterval<F> ex = BasicInterval<F>::point(F(0));
        if (term.a != 0) ex = ex + BasicInterval<F>::point(F(term.a)) * lt;
        if (term.b != 0) ex = ex + BasicInterval<F>::point(F(term.b)) * lm;
        acc = acc + BasicInterval<F>::point(F(term.c)) * exp_i(ex);
    }
    return acc;
}

// f'(t) = sum c_i t^{a_i-1} (1-t)^{b_i-1} (a_i (1-t) - b_i t)
template <class F>
BasicInterval<F> eval_form_deriv(const TOneMinusTForm& form, const BasicInterval<F>& t) {
    const BasicInterval<F> one_minus = BasicInterval<F>::point(F(1)) - t;
    const BasicInterval<F> lt = log_i(t);
    const BasicInterval<F> lm = log_i(one_minus);
    BasicInterval<F> acc = BasicInterval<F>::point(F(0));
    for (const auto& term : form.terms) {
        BasicInterval<F> ex = BasicInterval<F>::point(F(term.a - 1)) * lt +
                              BasicInterval<F>::point(F(term.b - 1)) * lm;
        BasicInterval<F> lin = BasicInterval<F>::point(F(term.a)) * one_minus -
                               BasicInterval<F>::point(F(term.b)) * t;
        acc = acc + BasicInterval<F>::point(F(term.c)) * (exp_i(ex) * lin);
    }
    return acc;
}

namespace detail {

// enclosure of t^p * f over the closed interval [0, eps], p chosen so every
// t-exponent is nonnegative; excludes 0 => f has no root in (0, eps]
inline Interval tail_enclosure_low(const TOneMinusTForm& form, double eps) {
    double p = 0;
    for (const auto& t : form.terms) p = std::max(p, -t.a);
    const Interval tI{0.0, eps};
    const Interval mI{1.0 - eps, 1.0};
    Interval acc = pow_i_closed0(tI, p);  // the multiplied constant term
    for (const auto& t : form.terms)
        acc = acc + t.c * (pow_i_closed0(tI, t.a + p) * pow_i(mI, t.b));
    return acc;
}

inline Interval tail_enclosure_high(const TOneMinusTForm& form, double eps) {
    double q = 0;
    for (const auto& t : form.terms) q = std::max(q, -t.b);
    const Interval mI{0.0, eps};         // 1-t
    const Interval tI{1.0 - eps, 1.0};   // t
    Interval acc = pow_i_closed0(mI, q);
    for (const auto& t : form.terms)
        acc = acc + t.c * (pow_i(tI, t.a) * pow_i_closed0(mI, t.b + q));
    return acc;
}

} // namespace detail

// ---- derivative cascade ---------------------------------------------------------

// represents t^alpha (1-t)^beta q(t, 1-t) with q homogeneous; q stored by
// x1-degree, q = sum q[i] x1^i x2^{deg-i}; empty q means the zero function
struct CascadeNode {
    double alpha = 0;
    double beta = 0;
    std::vector<double> q;

    bool is_zero() const {
        for (double v : q)
            if (v != 0) return false;
        return true;
    }
    int degree() const { return static_cast<int>(q.size()) - 1; }
};

// d/dt of the node: with x1 = t, x2 = 1-t the product rule gives
//   d/dt (t^a (1-t)^b q(t,1-t)) = t^{a-1} (1-t)^{b-1} q'(t,1-t),
//   q' = (a x2 - b x1) q + x1 x2 (dq/dx1 - dq/dx2),
// so the prefactor drops to (a-1, b-1) and the degree rises by one
inline CascadeNode cascade_step(const CascadeNode& node) {
    CascadeNode out;
    out.alpha = node.alpha - 1;
    out.beta = node.beta - 1;
    if (node.q.empty()) return out;
    const int d = node.degree();
    out.q.assign(static_cast<std::size_t>(d) + 2, 0.0);
    for (int i = 0; i <= d + 1; ++i) {
        double v = 0;
        if (i <= d) v += (node.alpha + i) * node.q[i];
        if (i >= 1) v += (-node.beta - d + i - 1) * node.q[i - 1];
        out.q[i] = v;
    }
    bool zero = true;
    for (double v : out.q) zero = zero && v == 0;
    if (zero) out.q.clear();
    return out;
}

// value of the node's function at t (for cross-checks)
inline double eval_cascade(const CascadeNode& node, double t) {
    if (node.q.empty()) return 0;
    double s = 0;
    const int d = node.degree();
    for (int i = 0; i <= d; ++i)
        s += node.q[i] * std::pow(t, i) * std::pow(1 - t, d - i);
    return std::pow(t, node.alpha) * std::pow(1 - t, node.beta) * s;
}

// ---- the two bound cubics -------------------------------------------------------

struct CubicPair {
    std::array<double, 4> F_coeffs{};     // ascending powers u^0 .. u^3
    std::array<double, 4> Fhat_coeffs{};  // same with (a,b) and (c,d) swapped
    double A = 0, B = 0, a = 0, b = 0, c = 0, d = 0;
};

inline CubicPair lemma_basic_cubics(double A, double B, double a, double b, double c,
                                    double d) {
    if (!(A > 0) || !(B > 0))
        throw std::invalid_argument("lemma_basic_cubics: A and B must be positive");
    auto build = [](double a, double b, double c, double d) -> std::array<double, 4> {
        return {
            b * (b - d) * (b - d - 1),
            (d - b) * (a * (b - d + 1) + 2 * b * (a - c + 1)),
            (a - c) * (2 * a * (b - d + 1) + b * (a - c + 1)),
            -a * (a - c) * (a - c - 1),
        };
    };
    CubicPair out;
    out.F_coeffs = build(a, b, c, d);
    out.Fhat_coeffs = build(c, d, a, b);
    out.A = A; out.B = B; out.a = a; out.b = b; out.c = c; out.d = d;
    return out;
}

// min(5, M+3) where M is the larger Descartes count of the two cubics
inline int certified_bound_trinomial(double A, double B, double a, double b, double c,
                                     double d) {
    CubicPair cp = lemma_basic_cubics(A, B, a, b, c, d);
    int m1 = sign_alternations({cp.F_coeffs.begin(), cp.F_coeffs.end()});
    int m2 = sign_alternations({cp.Fhat_coeffs.begin(), cp.Fhat_coeffs.end()});
    return std::min(5, std::max(m1, m2) + 3);
}

// ---- isolation -----------------------------------------------------------------

struct Cert1D {
    Interval t;
    CertStatus status = CertStatus::Unresolved;
};

struct Isolation1D {
    std::vector<Cert1D> roots;
    bool complete = false;
    long long subdivisions = 0;
    int escalations = 0;

    int certified_unique() const {
        int c = 0;
        for (const auto& r : roots) c += counts_as_unique(r.status);
        return c;
    }
    int unresolved() const { return static_cast<int>(roots.size()) - certified_unique(); }
};

namespace detail {

inline BasicInterval<ExtendedFloat> to_quad(const Interval& I) {
    return {ExtendedFloat(I.lo), ExtendedFloat(I.hi)};
}

struct IsolatorState {
    const TOneMinusTForm& form;
    const IsolationConfig& cfg;
    std::atomic<long long> subdivisions{0};
    std::atomic<int> escalations{0};
    std::atomic<bool> budget_exhausted{false};

    bool may_escalate() const {
        return cfg.precision == PrecisionPolicy::DoubleWithEscalation ||
               cfg.precision == PrecisionPolicy::Extended;
    }

    // thin-point sign; 0 when undecidable at the available precision
    int sign_at(double t, bool allow_quad) {
        int s = eval_form(form, Interval::point(t)).sign();
        if (s == 0 && allow_quad && may_escalate()) {
            escalations.fetch_add(1, std::memory_order_relaxed);
            s = eval_form(form, BasicInterval<ExtendedFloat>::point(ExtendedFloat(t))).sign();
        }
        return s;
    }

    // binary search keeping the sign change; assumes s_lo * s_hi == -1
    Interval refine_sign_change(double lo, double hi, int s_lo) {
        while (hi - lo > cfg.min_width) {
            double mid = 0.5 * (lo + hi);
            if (!(mid > lo && mid < hi)) break;
            int sm = sign_at(mid, true);
            if (sm == 0) {
                // the midpoint may sit on the root; try off-center splits
                double alt1 = lo + 0.375 * (hi - lo);
                double alt2 = lo + 0.625 * (hi - lo);
                if ((sm = sign_at(alt1, true)) != 0) mid = alt1;
                else if ((sm = sign_at(alt2, true)) != 0) mid = alt2;
                else break;
            }
            if (sm == s_lo) lo = mid; else hi = mid;
        }
        return {lo, hi};
    }
};

} // namespace detail

// Adaptive bisection of (0,1). Subintervals whose interval image excludes 0
// are discarded; a sign change with nonvanishing interval derivative yields a
// UNIQUE_NONDEGENERATE certificate refined to min_width; surviving intervals
// at min_width are retried once at extended precision before being reported
// SIGN_CHANGE_ONLY or UNRESOLVED. Open-interval tails are excluded by
// certifying monomial-normalized enclosures on shrinking [0,eps].
inline Isolation1D isolate_roots(const TOneMinusTForm& form, const IsolationConfig& cfg) {
    cfg.validate();
    Isolation1D out;
    if (form.terms.empty()) {  // f == 1
        out.complete = true;
        return out;
    }
    for (const auto& t : form.terms)
        if (t.c == 0 || !std::isfinite(t.c) || !std::isfinite(t.a) || !std::isfinite(t.b))
            throw std::invalid_argument("isolate_roots: bad form term");

    detail::IsolatorState st{form, cfg};
    std::mutex result_mu;
    std::vector<Cert1D> certs;
    bool tails_ok = true;

    // Certified root-free tails. Near 0 the halving may descend to 1e-280;
    // near 1 it stops at 1e-14, the resolution of double just below 1, and a
    // smaller surviving tail is reported unresolved.
    double eps0 = 0.25, eps1 = 0.25;
    {
        bool ok = false;
        while (!ok && eps0 > 1e-280) {
            if (detail::tail_enclosure_low(form, eps0).excludes_zero()) ok = true;
            else eps0 *= 0.5;
        }
        if (!ok) {
            certs.push_back({Interval{0.0, eps0}, CertStatus::Unresolved});
            tails_ok = false;
        }
        ok = false;
        while (!ok && eps1 > 1e-14) {
            if (detail::tail_enclosure_high(form, eps1).excludes_zero()) ok = true;
            else eps1 *= 0.5;
        }
        if (!ok) {
            certs.push_back({Interval{1.0 - eps1, 1.0}, CertStatus::Unresolved});
            tails_ok = false;
        }
    }

    struct Item {
        double lo, hi;
        int slo, shi;
    };

    std::deque<Item> queue;
    std::mutex qmu;
    std::condition_variable qcv;
    int active = 0;

    {
        double lo = eps0, hi = 1.0 - eps1;
        if (lo < hi)
            queue.push_back({lo, hi, st.sign_at(lo, false), st.sign_at(hi, false)});
    }

    auto emit = [&](Cert1D c) {
        std::lock_guard<std::mutex> g(result_mu);
        certs.push_back(std::move(c));
    };

    auto process = [&](const Item& it, auto push) {
        Interval I{it.lo, it.hi};
        Interval enc = eval_form(form, I);
        if (enc.excludes_zero()) return;

        // mean-value form f(mid) + f'(I)(I - mid); converges quadratically, so
        // tangencies do not stall the subdivision the way the direct form does
        Interval den = eval_form_deriv(form, I);
        {
            Interval mid = Interval::point(I.mid());
            Interval cen = eval_form(form, mid) + den * (I - mid);
            if (cen.excludes_zero()) return;
        }
        if (cfg.precision == PrecisionPolicy::Extended &&
            eval_form(form, detail::to_quad(I)).excludes_zero())
            return;

        if (it.slo * it.shi == -1 && den.excludes_zero()) {
            Interval r = st.refine_sign_change(it.lo, it.hi, it.slo);
            emit({r, CertStatus::UniqueNondegenerate});
            return;
        }

        const double w = it.hi - it.lo;
        bool at_floor = w <= cfg.min_width;
        if (!at_floor) {
            double mid = 0.5 * (it.lo + it.hi);
            at_floor = !(mid > it.lo && mid < it.hi);  // double resolution exhausted
        }
        if (!at_floor && st.budget_exhausted.load(std::memory_order_relaxed)) {
            emit({I, CertStatus::Unresolved});
            return;
        }
        // near the floor, retry the discard at extended precision once; this is
        // what resolves clusters hugging a tangency
        if (!at_floor && w <= 64 * cfg.min_width && st.may_escalate()) {
            st.escalations.fetch_add(1, std::memory_order_relaxed);
            auto Iq = detail::to_quad(I);
            auto encq = eval_form(form, Iq);
            if (encq.excludes_zero()) return;
            auto denq = eval_form_deriv(form, Iq);
            auto midq = BasicInterval<ExtendedFloat>::point(Iq.mid());
            auto cenq = eval_form(form, midq) + denq * (Iq - midq);
            if (cenq.excludes_zero()) return;
        }
        if (at_floor) {
            // final verdict, escalating once if the policy allows it
            int s0 = it.slo, s1 = it.shi;
            if (st.may_escalate()) {
                st.escalations.fetch_add(1, std::memory_order_relaxed);
                auto encq = eval_form(form, detail::to_quad(I));
                if (encq.excludes_zero()) return;
                if (s0 == 0) s0 = st.sign_at(it.lo, true);
                if (s1 == 0) s1 = st.sign_at(it.hi, true);
                if (s0 * s1 == -1) {
                    if (eval_form_deriv(form, detail::to_quad(I)).excludes_zero()) {
                        emit({I, CertStatus::UniqueNondegenerate});
                        return;
                    }
                    emit({I, CertStatus::SignChangeOnly});
                    return;
                }
            } else if (s0 * s1 == -1) {
                emit({I, CertStatus::SignChangeOnly});
                return;
            }
            emit({I, CertStatus::Unresolved});
            return;
        }

        long long used = st.subdivisions.fetch_add(1, std::memory_order_relaxed);
        if (used >= cfg.max_subdivisions) {
            st.budget_exhausted.store(true, std::memory_order_relaxed);
            emit({I, CertStatus::Unresolved});
            return;
        }
        double mid = 0.5 * (it.lo + it.hi);
        int sm = st.sign_at(mid, false);
        push(Item{it.lo, mid, it.slo, sm});
        push(Item{mid, it.hi, sm, it.shi});
    };

    const int nthreads = std::max(1, cfg.threads);
    if (nthreads == 1) {
        while (!queue.empty()) {
            Item it = queue.front();
            queue.pop_front();
            process(it, [&](Item x) { queue.push_back(x); });
        }
    } else {
        auto worker = [&] {
            std::unique_lock<std::mutex> lk(qmu);
            for (;;) {
                qcv.wait(lk, [&] { return !queue.empty() || active == 0; });
                if (queue.empty()) {
                    if (active == 0) { qcv.notify_all(); return; }
                    continue;
                }
                Item it = queue.front();
                queue.pop_front();
                ++active;
                lk.unlock();
                process(it, [&](Item x) {
                    std::lock_guard<std::mutex> g(qmu);
                    queue.push_back(x);
                    qcv.notify_one();
                });
                lk.lock();
                --active;
                if (queue.empty() && active == 0) { qcv.notify_all(); }
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // order by position and merge touching undecided intervals (a tangency
    // shows up as two adjacent straddling boxes around the same point)
    std::sort(certs.begin(), certs.end(),
              [](const Cert1D& x, const Cert1D& y) { return x.t.lo < y.t.lo; });
    std::vector<Cert1D> merged;
    for (const auto& c : certs) {
        if (!merged.empty() && !counts_as_unique(merged.back().status) &&
            !counts_as_unique(c.status) && c.t.lo <= merged.back().t.hi) {
            merged.back().t.hi = std::max(merged.back().t.hi, c.t.hi);
            if (c.status == CertStatus::SignChangeOnly ||
                merged.back().status == CertStatus::SignChangeOnly)
                merged.back().status = CertStatus::SignChangeOnly;
        } else {
            merged.push_back(c);
        }
    }
    out.roots = std::move(merged);
    out.subdivisions = st.subdivisions.load();
    out.escalations = st.escalations.load();
    out.complete = tails_ok && !st.budget_exhausted.load() && out.unresolved() == 0;

    if (out.certified_unique() > rolle_root_bound(form.k()))
        throw std::logic_error("isolate_roots: certified count exceeds the root bound");
    return out;
}

// extra bisection of a certified sign-change interval down to a target width
inline Interval tighten_unique(const TOneMinusTForm& form, Interval t, double target,
                               const IsolationConfig& cfg) {
    auto sgn = [&](double x) {
        int s = eval_form(form, Interval::point(x)).sign();
        if (s == 0 && cfg.precision != PrecisionPolicy::DoubleOnly)
            s = eval_form(form, BasicInterval<ExtendedFloat>::point(ExtendedFloat(x))).sign();
        return s;
    };
    int slo = sgn(t.lo);
    int shi = sgn(t.hi);
    if (slo * shi != -1) return t;
    while (t.width() > target) {
        double mid = t.mid();
        if (!(mid > t.lo && mid < t.hi)) break;
        int sm = sgn(mid);
        if (sm == 0) break;
        if (sm == slo) t.lo = mid;
        else t.hi = mid;
    }
    return t;
}

// positive-axis isolation via t = u/(1-u); each t^e becomes u^e (1-u)^{-e}
inline Isolation1D isolate_positive_roots(const RealExpPoly& p, const IsolationConfig& cfg) {
    cfg.validate();
    Isolation1D out;
    if (p.terms.size() <= 1) {  // constant-sign monomial (or zero terms)
        out.complete = true;
        return out;
    }
    const RealExpTerm pivot = p.terms.front();
    TOneMinusTForm form;
    for (std::size_t i = 1; i < p.terms.size(); ++i) {
        double e = p.terms[i].e - pivot.e;
        form.terms.push_back({p.terms[i].c / pivot.c, e, -e});
    }
    Isolation1D iso = isolate_roots(form, cfg);
    out.complete = iso.complete;
    out.subdivisions = iso.subdivisions;
    out.escalations = iso.escalations;
    for (const auto& c : iso.roots) {
        double lo = detail::bump_down(c.t.lo / (1.0 - c.t.lo), 2);
        double hi = c.t.hi >= 1.0 ? std::numeric_limits<double>::infinity()
                                  : detail::bump_up(c.t.hi / (1.0 - c.t.hi), 2);
        if (lo < 0) lo = 0;
        out.roots.push_back({Interval{lo, hi}, c.status});
    }
    if (out.certified_unique() > descartes_bound(p))
        throw std::logic_error("isolate_positive_roots: count exceeds the Descartes bound");
    return out;
}

} // namespace fewnomial

#endif
