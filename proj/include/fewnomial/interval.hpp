#ifndef FEWNOMIAL_INTERVAL_HPP
#define FEWNOMIAL_INTERVAL_HPP

// Outward-rounded interval arithmetic on (mostly) positive reals.
//
// Operations are computed in round-to-nearest and then widened outward by a
// few ulps, which is enough to enclose the exact real result as long as the
// underlying primitive is accurate to < 1 ulp (true for +,-,*,/ and for the
// libm exp/log used here). Powers with real exponents go through
// exp(e*log(x)), so the widening of log is amplified by |e| automatically and
// the enclosure stays sound for exponents like 108.
//
// Two scalar types are supported: double (default working precision) and
// ExtendedFloat, a 113-bit-mantissa binary float used when the isolator
// escalates precision.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace fewnomial {

using ExtendedFloat = boost::multiprecision::cpp_bin_float_quad;

namespace detail {

// ulps of outward slack added after each primitive
template <class F> struct widen_ulps { static constexpr int value = 16; };
template <> struct widen_ulps<double> { static constexpr int value = 3; };

inline double step_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double step_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double bump_up(double x, int k = widen_ulps<double>::value) {
    for (int i = 0; i < k && std::isfinite(x); ++i) x = step_up(x);
    return x;
}
inline double bump_down(double x, int k = widen_ulps<double>::value) {
    for (int i = 0; i < k && std::isfinite(x); ++i) x = step_down(x);
    return x;
}

inline ExtendedFloat bump_up(const ExtendedFloat& x, int k = widen_ulps<ExtendedFloat>::value) {
    using std::isfinite;
    if (!isfinite(x)) return x;
    static const ExtendedFloat eps = std::numeric_limits<ExtendedFloat>::epsilon();
    static const ExtendedFloat tiny = std::numeric_limits<ExtendedFloat>::min();
    return x + (abs(x) * (k * eps) + k * tiny);
}
inline ExtendedFloat bump_down(const ExtendedFloat& x, int k = widen_ulps<ExtendedFloat>::value) {
    using std::isfinite;
    if (!isfinite(x)) return x;
    static const ExtendedFloat eps = std::numeric_limits<ExtendedFloat>::epsilon();
    static const ExtendedFloat tiny = std::numeric_limits<ExtendedFloat>::min();
    return x - (abs(x) * (k * eps) + k * tiny);
}

} // namespace detail

template <class F>
struct BasicInterval {
    F lo{};
    F hi{};

    BasicInterval() = default;
    BasicInterval(F l, F h) : lo(l), hi(h) {
        if (!(lo <= hi)) throw std::invalid_argument("interval: lo > hi");
    }

    static BasicInterval point(F v) { return BasicInterval(v, v); }
    static BasicInterval whole() {
        return BasicInterval(-std::numeric_limits<F>::infinity(),
                             std::numeric_limits<F>::infinity());
    }

    F width() const { return hi - lo; }
    F mid() const { return (lo + hi) / 2; }

    bool contains(const F& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool strictly_positive() const { return lo > 0; }
    bool strictly_negative() const { return hi < 0; }
    bool excludes_zero() const { return strictly_positive() || strictly_negative(); }

    // -1 / +1 when the sign is certain, 0 when the interval straddles zero
    int sign() const { return strictly_positive() ? 1 : (strictly_negative() ? -1 : 0); }

    bool intersects(const BasicInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

using Interval = BasicInterval<double>;
using Box = std::vector<Interval>;

template <class F>
BasicInterval<F> operator-(const BasicInterval<F>& a) {
    return {-a.hi, -a.lo};
}

template <class F>
BasicInterval<F> operator+(const BasicInterval<F>& a, const BasicInterval<F>& b) {
    return {detail::bump_down(F(a.lo + b.lo), 1), detail::bump_up(F(a.hi + b.hi), 1)};
}

template <class F>
BasicInterval<F> operator-(const BasicInterval<F>& a, const BasicInterval<F>& b) {
    return {detail::bump_down(F(a.lo - b.hi), 1), detail::bump_up(F(a.hi - b.lo), 1)};
}

template <class F>
BasicInterval<F> operator*(const BasicInterval<F>& a, const BasicInterval<F>& b) {
    const F p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    using std::min;
    using std::max;
    F lo = min(min(p1, p2), min(p3, p4));
    F hi = max(max(p1, p2), max(p3, p4));
    return {detail::bump_down(lo, 1), detail::bump_up(hi, 1)};
}

template <class F>
BasicInterval<F> operator*(const F& s, const BasicInterval<F>& a) {
    return BasicInterval<F>::point(s) * a;
}

template <class F>
BasicInterval<F> operator+(const BasicInterval<F>& a, const F& s) {
    return a + BasicInterval<F>::point(s);
}

// reciprocal; requires 0 outside the interval
template <class F>
BasicInterval<F> reciprocal(const BasicInterval<F>& a) {
    if (a.contains_zero()) throw std::domain_error("reciprocal: interval contains 0");
    return {detail::bump_down(F(1 / a.hi), 1), detail::bump_up(F(1 / a.lo), 1)};
}

template <class F>
BasicInterval<F> exp_i(const BasicInterval<F>& a) {
    using std::exp;
    F lo = detail::bump_down(F(exp(a.lo)));
    F hi = detail::bump_up(F(exp(a.hi)));
    if (lo < 0) lo = 0;
    return {lo, hi};
}

// natural log; the interval must be strictly positive
template <class F>
BasicInterval<F> log_i(const BasicInterval<F>& a) {
    if (!(a.lo > 0)) throw std::domain_error("log_i: interval not strictly positive");
    using std::log;
    return {detail::bump_down(F(log(a.lo))), detail::bump_up(F(log(a.hi)))};
}

// x^e for strictly positive x, arbitrary real e (monotone, via exp/log)
template <class F>
BasicInterval<F> pow_i(const BasicInterval<F>& x, const F& e) {
    if (e == 0) return BasicInterval<F>::point(F(1));
    return exp_i(BasicInterval<F>::point(e) * log_i(x));
}

// x^e where x may touch 0 at its lower end (pow(0,e) = 0 for e > 0, 1 for e == 0;
// for e < 0 the enclosure is unbounded above)
template <class F>
BasicInterval<F> pow_i_closed0(const BasicInterval<F>& x, const F& e) {
    using std::exp;
    using std::log;
    if (x.lo < 0) throw std::domain_error("pow_i_closed0: negative base");
    if (e == 0) return BasicInterval<F>::point(F(1));
    if (x.lo > 0) return pow_i(x, e);
    if (x.hi == 0) {
        if (e < 0) throw std::domain_error("pow_i_closed0: 0^negative");
        return BasicInterval<F>::point(F(0));
    }
    if (e < 0)
        return {detail::bump_down(F(exp(F(e * log(x.hi))))),
                std::numeric_limits<F>::infinity()};
    return {F(0), detail::bump_up(F(exp(F(e * log(x.hi)))))};
}

inline Interval to_double_interval(const BasicInterval<ExtendedFloat>& a) {
    return {detail::bump_down(a.lo.convert_to<double>(), 1),
            detail::bump_up(a.hi.convert_to<double>(), 1)};
}

inline double box_max_width(const Box& b) {
    double w = 0;
    for (const auto& s : b) w = std::max(w, s.width());
    return w;
}

inline bool boxes_intersect(const Box& a, const Box& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].intersects(b[i])) return false;
    return true;
}

} // namespace fewnomial

#endif
