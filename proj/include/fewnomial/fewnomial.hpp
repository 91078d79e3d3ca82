#ifndef FEWNOMIAL_FEWNOMIAL_HPP
#define FEWNOMIAL_FEWNOMIAL_HPP

// Sparse real-exponent polynomials ("m-nomials") over the open positive
// orthant, with certified interval evaluation.
//
// Evaluation is per-term in log space, sign(c)*exp(ln|c| + sum a_j ln x_j),
// so exponents like 108 do not overflow intermediate powers. The scalar
// evaluate() is the midpoint of the thin-box interval evaluation, which makes
// the enclosure property (evaluate(f,x) in evaluate_interval(f,box) whenever
// x in box) hold by inclusion monotonicity instead of by error analysis.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "interval.hpp"

namespace fewnomial {

using ExponentVector = std::vector<double>;

struct Term {
    double coeff = 0;
    ExponentVector exponent;
};

class Fewnomial {
public:
    Fewnomial() = default;

    // Merges terms with identical exponent vectors (exact comparison of the
    // stored doubles); a merge that cancels to coefficient 0 drops the term.
    Fewnomial(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
        if (n_ < 1) throw std::invalid_argument("Fewnomial: n must be >= 1");
        for (const Term& t : terms_) {
            if (t.exponent.size() != static_cast<std::size_t>(n_))
                throw std::invalid_argument("Fewnomial: exponent length != n");
            for (double e : t.exponent)
                if (!std::isfinite(e))
                    throw std::invalid_argument("Fewnomial: non-finite exponent");
            if (!std::isfinite(t.coeff))
                throw std::invalid_argument("Fewnomial: non-finite coefficient");
        }
        canonicalize();
    }

    int n() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Fewnomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
            return a.exponent < b.exponent;
        });
        std::vector<Term> merged;
        for (const Term& t : terms_) {
            if (t.coeff == 0) continue;
            if (!merged.empty() && merged.back().exponent == t.exponent) {
                merged.back().coeff += t.coeff;
                if (merged.back().coeff == 0) merged.pop_back();
            } else {
                merged.push_back(t);
            }
        }
        terms_ = std::move(merged);
    }

    int n_ = 1;
    std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.exponent == b.exponent;
}

struct FewnomialSystem {
    int n = 1;
    std::vector<Fewnomial> polys;

    FewnomialSystem() = default;
    FewnomialSystem(int n_, std::vector<Fewnomial> p) : n(n_), polys(std::move(p)) {
        for (const auto& f : polys)
            if (f.n() != n) throw std::invalid_argument("FewnomialSystem: mixed dimensions");
    }
    int k() const { return static_cast<int>(polys.size()); }
};

// ---- evaluation ------------------------------------------------------------

inline void require_positive_box(const Box& b) {
    for (const auto& s : b)
        if (!(s.lo > 0)) throw std::domain_error("box touches a coordinate hyperplane");
}

inline Interval evaluate_interval(const Fewnomial& f, const Box& b) {
    if (b.size() != static_cast<std::size_t>(f.n()))
        throw std::invalid_argument("evaluate_interval: box dimension mismatch");
    require_positive_box(b);
    std::vector<Interval> logs;
    logs.reserve(b.size());
    for (const auto& s : b) logs.push_back(log_i(s));
    Interval acc = Interval::point(0.0);
    for (const Term& t : f.terms()) {
        Interval ex = Interval::point(0.0);
        for (int j = 0; j < f.n(); ++j)
            if (t.exponent[j] != 0) ex = ex + t.exponent[j] * logs[j];
        acc = acc + t.coeff * exp_i(ex);
    }
    return acc;
}

struct EvalResult {
    double value = 0;
    bool overflow = false;  // some term overflowed to +-inf in double
};

inline EvalResult evaluate_checked(const Fewnomial& f, const std::vector<double>& x) {
    Box b;
    b.reserve(x.size());
    for (double v : x) {
        if (!(v > 0)) throw std::domain_error("evaluate: point not in the open positive orthant");
        b.push_back(Interval::point(v));
    }
    Interval r = evaluate_interval(f, b);
    EvalResult out;
    if (std::isinf(r.lo) && std::isinf(r.hi) && r.lo < r.hi) {
        // opposite-sign overflow; no usable value
        out.value = std::numeric_limits<double>::quiet_NaN();
        out.overflow = true;
    } else if (std::isinf(r.lo) || std::isinf(r.hi)) {
        out.value = std::isinf(r.lo) ? r.lo : r.hi;
        out.overflow = true;
    } else {
        out.value = r.mid();
    }
    return out;
}

inline double evaluate(const Fewnomial& f, const std::vector<double>& x) {
    return evaluate_checked(f, x).value;
}

// ---- term-wise derivatives -------------------------------------------------

// x_i * df/dx_i; keeps every exponent vector intact (coefficients scale by a_i)
inline Fewnomial log_partial(const Fewnomial& f, int i) {
    if (i < 1 || i > f.n()) throw std::invalid_argument("log_partial: index out of range");
    std::vector<Term> out;
    for (const Term& t : f.terms()) {
        double a = t.exponent[i - 1];
        if (a != 0) out.push_back({t.coeff * a, t.exponent});
    }
    return Fewnomial(f.n(), std::move(out));
}

// true partial df/dx_i; the i-th exponent drops by 1 (real exponents keep this closed)
inline Fewnomial partial(const Fewnomial& f, int i) {
    if (i < 1 || i > f.n()) throw std::invalid_argument("partial: index out of range");
    std::vector<Term> out;
    for (const Term& t : f.terms()) {
        double a = t.exponent[i - 1];
        if (a == 0) continue;
        Term nt{t.coeff * a, t.exponent};
        nt.exponent[i - 1] = a - 1;
        out.push_back(std::move(nt));
    }
    return Fewnomial(f.n(), std::move(out));
}

// ---- small polynomial algebra (used by the curvature machinery) ------------

inline Fewnomial add(const Fewnomial& a, const Fewnomial& b) {
    if (a.n() != b.n()) throw std::invalid_argument("add: dimension mismatch");
    std::vector<Term> t = a.terms();
    t.insert(t.end(), b.terms().begin(), b.terms().end());
    return Fewnomial(a.n(), std::move(t));
}

inline Fewnomial scale(const Fewnomial& a, double s) {
    std::vector<Term> t = a.terms();
    for (auto& x : t) x.coeff *= s;
    return Fewnomial(a.n(), std::move(t));
}

inline Fewnomial multiply(const Fewnomial& a, const Fewnomial& b) {
    if (a.n() != b.n()) throw std::invalid_argument("multiply: dimension mismatch");
    std::vector<Term> t;
    t.reserve(a.terms().size() * b.terms().size());
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms()) {
            Term nt{ta.coeff * tb.coeff, ta.exponent};
            for (int j = 0; j < a.n(); ++j) nt.exponent[j] += tb.exponent[j];
            t.push_back(std::move(nt));
        }
    return Fewnomial(a.n(), std::move(t));
}

// c * x^v * f
inline Fewnomial multiply_monomial(const Fewnomial& f, double c, const ExponentVector& v) {
    if (v.size() != static_cast<std::size_t>(f.n()))
        throw std::invalid_argument("multiply_monomial: dimension mismatch");
    std::vector<Term> t = f.terms();
    for (auto& x : t) {
        x.coeff *= c;
        for (int j = 0; j < f.n(); ++j) x.exponent[j] += v[j];
    }
    return Fewnomial(f.n(), std::move(t));
}

// ---- Jacobian certification -------------------------------------------------

namespace detail {

// Laplace expansion determinant of a small interval matrix
inline Interval interval_det(std::vector<std::vector<Interval>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Interval acc = Interval::point(0.0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Interval>> sub(n - 1, std::vector<Interval>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        Interval cof = m[0][j] * interval_det(sub);
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

} // namespace detail

// True only when the interval enclosure of det(Jacobian) over the box excludes 0
// (a sufficient certificate; false means "not certified", not "degenerate").
// Internally uses the column-scaled matrix [x_j d_j f_i], whose determinant is
// det(J) * x_1...x_n, nonvanishing on the orthant iff det(J) is.
inline bool interval_jacobian_nonsingular(const FewnomialSystem& F, const Box& b) {
    if (F.k() != F.n) throw std::invalid_argument("interval_jacobian_nonsingular: k != n");
    if (F.n > 6) throw std::invalid_argument("interval_jacobian_nonsingular: n too large");
    require_positive_box(b);
    std::vector<std::vector<Interval>> J(F.n, std::vector<Interval>(F.n));
    for (int i = 0; i < F.n; ++i)
        for (int j = 0; j < F.n; ++j)
            J[i][j] = evaluate_interval(log_partial(F.polys[i], j + 1), b);
    return detail::interval_det(std::move(J)).excludes_zero();
}

} // namespace fewnomial

#endif
