#ifndef FEWNOMIAL_TRANSFORM_HPP
#define FEWNOMIAL_TRANSFORM_HPP

// Monomial changes of variables x = psi(y), psi_j(y) = s_j * prod_i y_i^{A(j,i)},
// and reduction of a bivariate pair to the normal form (1 - x1 - x2, 1 + sum c_i x1^a x2^b).
//
// Exponent convention is row-vector throughout: applying a map with matrix A
// sends an exponent vector a to a*A, which corresponds exactly to the point
// substitution above.

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fewnomial.hpp"

namespace fewnomial {

struct MonomialMap {
    Eigen::MatrixXd matrix;   // n x n, nonsingular
    Eigen::VectorXd scaling;  // strictly positive

    int n() const { return static_cast<int>(matrix.rows()); }
};

inline MonomialMap identity_map(int n) {
    return {Eigen::MatrixXd::Identity(n, n), Eigen::VectorXd::Ones(n)};
}

// sigma_min/sigma_max certificate; throws on a map too close to singular
inline void require_nonsingular(const Eigen::MatrixXd& A, double tau) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0 || sv(sv.size() - 1) / sv(0) <= tau)
        throw std::invalid_argument("monomial map matrix is (numerically) singular");
}

inline Fewnomial apply_monomial_map(const Fewnomial& f, const MonomialMap& M,
                                    double tau = 1e-9) {
    if (M.n() != f.n()) throw std::invalid_argument("apply_monomial_map: dimension mismatch");
    require_nonsingular(M.matrix, tau);
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Eigen::RowVectorXd a(f.n());
        for (int j = 0; j < f.n(); ++j) a(j) = t.exponent[j];
        Eigen::RowVectorXd na = a * M.matrix;
        double c = t.coeff;
        for (int j = 0; j < f.n(); ++j)
            if (a(j) != 0) c *= std::pow(M.scaling(j), a(j));
        Term nt{c, ExponentVector(f.n())};
        for (int j = 0; j < f.n(); ++j) nt.exponent[j] = na(j);
        out.push_back(std::move(nt));
    }
    return Fewnomial(f.n(), std::move(out));
}

inline MonomialMap compose(const MonomialMap& M1, const MonomialMap& M2) {
    const int n = M1.n();
    if (M2.n() != n) throw std::invalid_argument("compose: dimension mismatch");
    MonomialMap r;
    r.matrix = M1.matrix * M2.matrix;
    r.scaling = Eigen::VectorXd(n);
    for (int j = 0; j < n; ++j) {
        double s = M1.scaling(j);
        for (int i = 0; i < n; ++i) s *= std::pow(M2.scaling(i), M1.matrix(j, i));
        r.scaling(j) = s;
    }
    return r;
}

inline MonomialMap inverse(const MonomialMap& M, double tau = 1e-9) {
    require_nonsingular(M.matrix, tau);
    MonomialMap r;
    r.matrix = M.matrix.inverse();
    const int n = M.n();
    r.scaling = Eigen::VectorXd(n);
    for (int i = 0; i < n; ++i) {
        double s = 1;
        for (int j = 0; j < n; ++j) s *= std::pow(M.scaling(j), -r.matrix(i, j));
        r.scaling(i) = s;
    }
    return r;
}

inline std::vector<double> map_point(const MonomialMap& M, const std::vector<double>& y) {
    const int n = M.n();
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) {
        double acc = std::log(M.scaling(j));
        for (int i = 0; i < n; ++i) acc += M.matrix(j, i) * std::log(y[i]);
        x[j] = std::exp(acc);
    }
    return x;
}

// interval-safe image of a positive box
inline Box map_box(const MonomialMap& M, const Box& y) {
    require_positive_box(y);
    const int n = M.n();
    std::vector<Interval> logs(n);
    for (int i = 0; i < n; ++i) logs[i] = log_i(y[i]);
    Box x(n);
    for (int j = 0; j < n; ++j) {
        Interval acc = log_i(Interval::point(M.scaling(j)));
        for (int i = 0; i < n; ++i)
            if (M.matrix(j, i) != 0) acc = acc + M.matrix(j, i) * logs[i];
        x[j] = exp_i(acc);
    }
    return x;
}

// ---- normal forms ------------------------------------------------------------

// Divides f by the (coefficient-signed) term whose exponent vector is the
// lexicographically smallest support point; that point is always a vertex of
// Newt(f), so the chosen term becomes the constant 1.
inline Fewnomial normalize_constant(const Fewnomial& f) {
    if (f.is_zero()) throw std::invalid_argument("normalize_constant: zero polynomial");
    const Term& pivot = f.terms().front();  // terms are lex-sorted
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Term nt{t.coeff / pivot.coeff, t.exponent};
        for (int j = 0; j < f.n(); ++j) nt.exponent[j] -= pivot.exponent[j];
        out.push_back(std::move(nt));
    }
    return Fewnomial(f.n(), std::move(out));
}

struct CanonicalTerm {
    double c = 0;  // coefficient
    double a = 0;  // x1 exponent
    double b = 0;  // x2 exponent
};

// F = (1 - x1 - x2, 1 + sum_i c_i x1^{a_i} x2^{b_i}) plus the map sending
// canonical roots back to roots of the original pair.
struct CanonicalPair {
    std::vector<CanonicalTerm> f2_terms;
    MonomialMap to_original;
    int canonicalized_index = 0;  // which input polynomial became 1 - x1 - x2
};

enum class CanonicalizeStatus {
    Ok,
    DegenerateNewton,  // Newt(f1) is a segment or point; use the mixed-volume-zero/pyramidal path
    SignObstruction,   // f1 keeps one sign on the orthant; the pair has no positive roots
};

struct CanonicalizeResult {
    CanonicalizeStatus status = CanonicalizeStatus::Ok;
    std::optional<CanonicalPair> pair;
};

// Reduces a bivariate pair whose first member is a trinomial with 2-dimensional
// Newton polygon to the canonical form above. The second member may have any
// term count >= 1; its lex-smallest support term is normalized to the constant 1.
inline CanonicalizeResult canonicalize_pair(const FewnomialSystem& F, double tau = 1e-9) {
    if (F.n != 2 || F.k() != 2) throw std::invalid_argument("canonicalize_pair: need a 2x2 system");
    const Fewnomial& f1 = F.polys[0];
    const Fewnomial& f2 = F.polys[1];
    if (f1.is_zero() || f2.is_zero())
        throw std::invalid_argument("canonicalize_pair: zero polynomial");

    if (f1.term_count() > 3)
        throw std::invalid_argument("canonicalize_pair: first member has more than 3 terms");
    if (f1.term_count() < 3) return {CanonicalizeStatus::DegenerateNewton, std::nullopt};

    const auto& ts = f1.terms();
    int pos = 0;
    for (const Term& t : ts) pos += (t.coeff > 0);
    if (pos == 0 || pos == 3) return {CanonicalizeStatus::SignObstruction, std::nullopt};

    // the term whose sign differs from the other two; dividing by it makes the
    // other coefficients negative
    int odd = -1;
    for (int i = 0; i < 3; ++i) {
        bool sign_i = ts[i].coeff > 0;
        if ((sign_i && pos == 1) || (!sign_i && pos == 2)) odd = i;
    }
    const Term& todd = ts[odd];
    int r1 = (odd == 0) ? 1 : 0;
    int r2 = (odd == 2) ? 1 : 2;

    Eigen::Matrix2d E;  // rows: exponent differences alpha, beta
    E << ts[r1].exponent[0] - todd.exponent[0], ts[r1].exponent[1] - todd.exponent[1],
         ts[r2].exponent[0] - todd.exponent[0], ts[r2].exponent[1] - todd.exponent[1];
    {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(E);
        const auto& sv = svd.singularValues();
        if (sv(0) == 0 || sv(1) / sv(0) <= tau)
            return {CanonicalizeStatus::DegenerateNewton, std::nullopt};
    }

    const double Ap = -ts[r1].coeff / todd.coeff;  // > 0
    const double Bp = -ts[r2].coeff / todd.coeff;  // > 0

    MonomialMap sub{E.inverse(), Eigen::VectorXd::Ones(2)};
    MonomialMap scl{Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(1.0 / Ap, 1.0 / Bp)};
    MonomialMap total = compose(sub, scl);

    Fewnomial g2 = apply_monomial_map(normalize_constant(f2), total, tau);

    CanonicalPair cp;
    cp.to_original = total;
    for (const Term& t : g2.terms()) {
        if (t.exponent[0] == 0 && t.exponent[1] == 0) continue;  // the constant 1
        cp.f2_terms.push_back({t.coeff, t.exponent[0], t.exponent[1]});
    }
    return {CanonicalizeStatus::Ok, std::move(cp)};
}

} // namespace fewnomial

#endif
