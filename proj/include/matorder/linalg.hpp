#pragma once

#include "matorder/matrix.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>

namespace matorder {

template <Field F>
struct RrefResult {
    Mat<F> r;                    // reduced row-echelon form
    std::vector<int> pivot_cols; // one entry per pivot row, ascending
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

namespace detail {

// Pivot selection: first non-negligible entry on exact fields, entry of
// largest magnitude on complex floats.
template <Field F>
int pick_pivot_row(const Mat<F>& m, int col, int from_row, double threshold) {
    if constexpr (F::is_exact) {
        (void)threshold;
        for (int i = from_row; i < m.rows(); ++i)
            if (!m.field().is_zero(m(i, col))) return i;
        return -1;
    } else {
        int best = -1;
        double best_abs = threshold;
        for (int i = from_row; i < m.rows(); ++i) {
            double a = std::abs(m(i, col));
            if (a > best_abs) { best_abs = a; best = i; }
        }
        return best;
    }
}

template <Field F>
double negligibility_threshold(const Mat<F>& m) {
    if constexpr (F::is_exact) { (void)m; return 0.0; }
    else return m.field().tol * max_abs_entry(m);
}

} // namespace detail

template <Field F>
RrefResult<F> reduced_row_echelon(const Mat<F>& m) {
    const F& f = m.field();
    Mat<F> a = m;
    const double threshold = detail::negligibility_threshold(m);
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = detail::pick_pivot_row(a, col, row, threshold);
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        typename F::Elem inv_p = f.inv(a(row, col));
        for (int j = 0; j < a.cols(); ++j) a(row, j) = f.mul(inv_p, a(row, j));
        a(row, col) = f.one();
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || f.is_zero(a(i, col))) continue;
            typename F::Elem factor = a(i, col);
            for (int j = 0; j < a.cols(); ++j)
                a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
            a(i, col) = f.zero();
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver and singular values (complex float path)
// ---------------------------------------------------------------------------

struct HermitianEigen {
    std::vector<double> values; // descending
    Mat<ComplexField> vectors;  // unitary, columns match values
};

/// Cyclic Jacobi for Hermitian matrices; converges when the off-diagonal norm
/// drops below 1e-14 x Frobenius norm of the input.
inline HermitianEigen hermitian_eigen(const Mat<ComplexField>& h) {
    if (!h.is_square()) throw std::invalid_argument("hermitian_eigen requires a square matrix");
    const int n = h.rows();
    const ComplexField& f = h.field();
    Mat<ComplexField> a = h;
    Mat<ComplexField> v = Mat<ComplexField>::identity(f, n);
    const double frob = frobenius_norm(h);
    const double stop = 1e-14 * frob;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (p != q) s += std::norm(a(p, q));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 80 && frob > 0; ++sweep) {
        if (off_norm() <= stop) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g <= 1e-300) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / g; // e^{i phi}
                // Unitary plane rotation J = [[c, -s e^{i phi}],[s e^{-i phi}, c]]
                // zeroing the (p,q) entry of J* A J.
                double t;
                if (app == aqq) {
                    t = 1.0;
                } else {
                    const double tau = (aqq - app) / (2.0 * g);
                    t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex jpq = -s * phase;
                const Complex jqp = s * std::conj(phase);
                // columns update: A <- A J, V <- V J
                for (int i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = aip * c + aiq * jqp;
                    a(i, q) = aip * jpq + aiq * c;
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = vip * c + viq * jqp;
                    v(i, q) = vip * jpq + viq * c;
                }
                // rows update: A <- J* A
                for (int j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = apj * c + aqj * std::conj(jqp);
                    a(q, j) = apj * std::conj(jpq) + aqj * c;
                }
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};
            }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = a(i, i).real();
    std::sort(order.begin(), order.end(), [&](int x, int y) { return diag[static_cast<std::size_t>(x)] > diag[static_cast<std::size_t>(y)]; });

    HermitianEigen out{std::vector<double>(static_cast<std::size_t>(n)), Mat<ComplexField>(f, n, n)};
    for (int k = 0; k < n; ++k) {
        out.values[static_cast<std::size_t>(k)] = diag[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[static_cast<std::size_t>(k)]);
    }
    return out;
}

struct ComplexSvd {
    std::vector<double> sigma;  // size = cols(m), descending
    Mat<ComplexField> v;        // cols(m) x cols(m), unitary
    Mat<ComplexField> u;        // rows(m) x rank, orthonormal columns
    int rank = 0;               // singular values > tol * sigma_max
};

inline ComplexSvd svd(const Mat<ComplexField>& m) {
    const ComplexField& f = m.field();
    const int n = m.cols();
    HermitianEigen eig = hermitian_eigen(m.adjoint() * m);
    ComplexSvd out{std::vector<double>(static_cast<std::size_t>(n)), eig.vectors,
                   Mat<ComplexField>(f, m.rows(), 1), 0};
    for (int i = 0; i < n; ++i)
        out.sigma[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, eig.values[static_cast<std::size_t>(i)]));
    const double smax = out.sigma.empty() ? 0.0 : out.sigma[0];
    int r = 0;
    while (r < n && out.sigma[static_cast<std::size_t>(r)] > f.tol * smax && smax > 0) ++r;
    out.rank = r;
    if (r > 0) {
        out.u = Mat<ComplexField>(f, m.rows(), r);
        for (int k = 0; k < r; ++k) {
            Mat<ComplexField> av = m * out.v.col(k);
            for (int i = 0; i < m.rows(); ++i)
                out.u(i, k) = av(i, 0) / out.sigma[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

inline std::vector<double> singular_values(const Mat<ComplexField>& m) { return svd(m).sigma; }

/// Smallest distance between the normalized singular values of m and the rank
/// threshold; +inf for the zero matrix. Used to detect near-threshold rank
/// decisions on the float path.
inline double rank_decision_margin(const Mat<ComplexField>& m) {
    ComplexSvd s = svd(m);
    if (s.sigma.empty() || s.sigma[0] == 0.0) return std::numeric_limits<double>::infinity();
    double margin = std::numeric_limits<double>::infinity();
    for (double sv : s.sigma)
        margin = std::min(margin, std::abs(sv / s.sigma[0] - m.field().tol));
    return margin;
}

// ---------------------------------------------------------------------------
// Rank, factorization, null space, solve, inverse
// ---------------------------------------------------------------------------

template <Field F>
int rank(const Mat<F>& m) {
    if constexpr (F::is_exact) {
        return reduced_row_echelon(m).rank();
    } else {
        if (m.is_zero()) return 0;
        return svd(m).rank;
    }
}

/// Full-rank factorization m = F * G with rank(F) = rank(G) = rank(m).
/// Exact fields: F = pivot columns of m, G = nonzero rows of the RREF.
/// Complex floats: truncated SVD factors (consistent with the SVD-based rank).
template <Field F>
std::pair<Mat<F>, Mat<F>> rank_factorization(const Mat<F>& m) {
    if (m.is_zero()) throw std::domain_error("zero has no rank factorization");
    if constexpr (F::is_exact) {
        RrefResult<F> rr = reduced_row_echelon(m);
        const int r = rr.rank();
        Mat<F> fac_f(m.field(), m.rows(), r);
        Mat<F> fac_g(m.field(), r, m.cols());
        for (int k = 0; k < r; ++k)
            for (int i = 0; i < m.rows(); ++i) fac_f(i, k) = m(i, rr.pivot_cols[static_cast<std::size_t>(k)]);
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < m.cols(); ++j) fac_g(k, j) = rr.r(k, j);
        return {std::move(fac_f), std::move(fac_g)};
    } else {
        ComplexSvd s = svd(m);
        const int r = s.rank;
        Mat<F> fac_f(m.field(), m.rows(), r);
        Mat<F> fac_g(m.field(), r, m.cols());
        for (int k = 0; k < r; ++k)
            for (int i = 0; i < m.rows(); ++i) fac_f(i, k) = s.u(i, k) * s.sigma[static_cast<std::size_t>(k)];
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < m.cols(); ++j) fac_g(k, j) = std::conj(s.v(j, k));
        return {std::move(fac_f), std::move(fac_g)};
    }
}

/// Basis of {v : m v = 0} as column vectors; count = cols - rank.
template <Field F>
std::vector<Mat<F>> null_space_basis(const Mat<F>& m) {
    if constexpr (F::is_exact) {
        RrefResult<F> rr = reduced_row_echelon(m);
        std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
        for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
        std::vector<Mat<F>> basis;
        for (int free_col = 0; free_col < m.cols(); ++free_col) {
            if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
            Mat<F> v(m.field(), m.cols(), 1);
            v(free_col, 0) = m.field().one();
            for (int k = 0; k < rr.rank(); ++k)
                v(rr.pivot_cols[static_cast<std::size_t>(k)], 0) = m.field().neg(rr.r(k, free_col));
            basis.push_back(std::move(v));
        }
        return basis;
    } else {
        if (m.is_zero()) {
            std::vector<Mat<F>> basis;
            for (int j = 0; j < m.cols(); ++j) {
                Mat<F> v(m.field(), m.cols(), 1);
                v(j, 0) = m.field().one();
                basis.push_back(std::move(v));
            }
            return basis;
        }
        ComplexSvd s = svd(m);
        std::vector<Mat<F>> basis;
        for (int k = s.rank; k < m.cols(); ++k) basis.push_back(s.v.col(k));
        return basis;
    }
}

/// One particular solution of A x = b (multiple right-hand sides allowed), or
/// nullopt when inconsistent. Free variables are assigned via `free_value`
/// (defaults to zero), which receives (free column index, rhs column index).
template <Field F>
std::optional<Mat<F>> solve_linear(
    const Mat<F>& a, const Mat<F>& b,
    const std::function<typename F::Elem(int, int)>& free_value = nullptr) {
    a.require_compatible(b);
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear shape mismatch");
    const F& f = a.field();
    RrefResult<F> rr = reduced_row_echelon(hstack(a, b));
    // any pivot inside the appended block means inconsistency
    for (int c : rr.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    std::vector<int> pivot_of_col(static_cast<std::size_t>(a.cols()), -1);
    for (int k = 0; k < rr.rank(); ++k) pivot_of_col[static_cast<std::size_t>(rr.pivot_cols[static_cast<std::size_t>(k)])] = k;
    Mat<F> x(f, a.cols(), b.cols());
    for (int rhs = 0; rhs < b.cols(); ++rhs) {
        for (int col = 0; col < a.cols(); ++col)
            if (pivot_of_col[static_cast<std::size_t>(col)] < 0 && free_value)
                x(col, rhs) = free_value(col, rhs);
        for (int col = 0; col < a.cols(); ++col) {
            int k = pivot_of_col[static_cast<std::size_t>(col)];
            if (k < 0) continue;
            typename F::Elem v = rr.r(k, a.cols() + rhs);
            for (int j = 0; j < a.cols(); ++j)
                if (j != col && pivot_of_col[static_cast<std::size_t>(j)] < 0 && !f.is_zero(x(j, rhs)))
                    v = f.sub(v, f.mul(rr.r(k, j), x(j, rhs)));
            x(col, rhs) = v;
        }
    }
    if constexpr (!F::is_exact) {
        if (!matrices_equal(a * x, b)) return std::nullopt;
    }
    return x;
}

template <Field F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse requires a square matrix");
    if (rank(m) != m.rows()) return std::nullopt;
    auto x = solve_linear(m, Mat<F>::identity(m.field(), m.rows()));
    if constexpr (!F::is_exact) {
        if (x && !matrices_equal(m * *x, Mat<F>::identity(m.field(), m.rows()))) return std::nullopt;
    }
    return x;
}

/// Does `m` lie in the linear span of `basis`? (All matrices same shape.)
template <Field F>
bool in_span(const std::vector<Mat<F>>& basis, const Mat<F>& m) {
    if (m.is_zero()) return true;
    if (basis.empty()) return false;
    Mat<F> stacked = vec_cm(basis.front());
    for (std::size_t k = 1; k < basis.size(); ++k) stacked = hstack(stacked, vec_cm(basis[k]));
    return solve_linear(stacked, vec_cm(m)).has_value();
}

template <Field F>
bool span_subset(const std::vector<Mat<F>>& inner, const std::vector<Mat<F>>& outer) {
    for (const auto& m : inner)
        if (!in_span(outer, m)) return false;
    return true;
}

} // namespace matorder
