#pragma once

#include "matorder/orders.hpp"

namespace matorder {

/// A rank-one matrix u = x y^T together with tau = trace(u), the scalar with
/// u^2 = tau u.
template <Field F>
struct RankOneElement {
    Mat<F> value;
    typename F::Elem tau;
    Mat<F> left_factor;  // column vector x
    Mat<F> right_factor; // row vector y^T
};

template <Field F>
RankOneElement<F> rank_one_of(const Mat<F>& m) {
    if (rank(m) != 1) throw std::domain_error("rank_one_of requires a rank-one matrix");
    auto [f, g] = rank_factorization(m);
    return {m, m.trace(), f, g};
}

/// A maximal subspace of rank-at-most-one matrices anchored at u: either
/// L_u = {u x} (fixed column space) or R_u = {x u} (fixed row space). Both
/// have dimension n inside M_n.
template <Field F>
struct RankOneSubspace {
    enum class Kind { Left, Right };
    Kind kind;
    RankOneElement<F> anchor;
    std::vector<Mat<F>> basis;

    bool contains(const Mat<F>& m) const {
        if (m.is_zero()) return true;
        if (kind == Kind::Left) return rank(hstack(anchor.left_factor, m)) == 1;
        return rank(vstack(anchor.right_factor, m)) == 1;
    }
};

template <Field F>
RankOneSubspace<F> rank_one_subspace(const RankOneElement<F>& u, typename RankOneSubspace<F>::Kind kind) {
    const F& f = u.value.field();
    const int n = u.value.rows();
    std::vector<Mat<F>> basis;
    for (int k = 0; k < n; ++k) {
        Mat<F> e(f, kind == RankOneSubspace<F>::Kind::Left ? 1 : n,
                 kind == RankOneSubspace<F>::Kind::Left ? n : 1);
        if (kind == RankOneSubspace<F>::Kind::Left) {
            e(0, k) = f.one();
            basis.push_back(u.left_factor * e); // x e_k^T
        } else {
            e(k, 0) = f.one();
            basis.push_back(e * u.right_factor); // e_k y^T
        }
    }
    return {kind, u, std::move(basis)};
}

/// Constructive minimal element below a nonzero a: scan w = e_j e_1^T over
/// the nonzero columns j of a, set v = w (a w)^- and return u = a v a, which
/// is rank one and satisfies u <=- a. (u = a v a rather than a v: only the
/// former satisfies the idempotent chain p u = p a with p = a v.)
template <Field F>
RankOneElement<F> minimal_below(const Mat<F>& a) {
    if (a.is_zero()) throw std::domain_error("no nonzero minimal element below 0");
    if (!a.is_square()) throw std::invalid_argument("minimal_below requires a square matrix");
    const F& f = a.field();
    const int n = a.rows();
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j)
        for (int i = 0; i < n; ++i)
            if (!f.is_zero(a(i, j))) { col = j; break; }
    Mat<F> w = Mat<F>::unit(f, n, col, 0); // e_col e_1^T
    Mat<F> v = w * inner_inverse(a * w);
    Mat<F> u = a * v * a;
    if (rank(u) != 1 || !minus_leq(u, a).holds)
        throw std::logic_error("minimal_below output failed certification");
    return rank_one_of(u);
}

/// Nonzero minimal elements of the minus order are exactly the rank-one
/// matrices.
template <Field F>
bool is_minimal(const Mat<F>& u) {
    if (u.is_zero()) throw std::invalid_argument("is_minimal requires a nonzero matrix");
    return rank(u) == 1;
}

template <Field F>
struct MaximalityReport {
    bool maximal = false;
    std::optional<Mat<F>> extension; // strict extension witness when not maximal
};

/// Maximal elements of the minus order in M_n over a field are exactly the
/// invertible matrices. A negative answer carries the witness
/// b = a + (1 - a a-) E_kl (1 - a- a), a strictly larger element.
template <Field F>
MaximalityReport<F> is_maximal(const Mat<F>& a) {
    if (!a.is_square()) throw std::invalid_argument("is_maximal requires a square matrix");
    const F& f = a.field();
    const int n = a.rows();
    if (rank(a) == n) return {true, std::nullopt};

    Mat<F> g = inner_inverse(a);
    Mat<F> id = Mat<F>::identity(f, n);
    Mat<F> left = id - a * g;
    Mat<F> right = id - g * a;
    int row = -1, colv = -1;
    for (int k = 0; k < n && row < 0; ++k)
        for (int i = 0; i < n; ++i)
            if (!f.is_zero(left(i, k))) { row = k; break; }
    for (int l = 0; l < n && colv < 0; ++l)
        for (int j = 0; j < n; ++j)
            if (!f.is_zero(right(l, j))) { colv = l; break; }
    Mat<F> b = a + left * Mat<F>::unit(f, n, row, colv) * right;
    if (matrices_equal(a, b) || !minus_leq(a, b).holds)
        throw std::logic_error("is_maximal extension witness failed certification");
    return {false, std::move(b)};
}

template <Field F>
struct RankOneSumAlignment {
    bool l_aligned = false; // shared column space
    bool r_aligned = false; // shared row space
};

/// For rank-one u, v with u + v rank one, decide whether they share column
/// space (L-aligned), row space (R-aligned), or both; at least one always
/// holds on a rank-one line.
template <Field F>
RankOneSumAlignment<F> rank_one_sum_check(const RankOneElement<F>& u, const RankOneElement<F>& v) {
    Mat<F> sum = u.value + v.value;
    if (sum.is_zero()) throw std::invalid_argument("rank_one_sum_check: u + v must be nonzero");
    if (rank(sum) != 1) throw std::domain_error("not a rank-one line");
    RankOneSumAlignment<F> out;
    out.l_aligned = rank(hstack(u.left_factor, v.left_factor)) == 1;
    out.r_aligned = rank(vstack(u.right_factor, v.right_factor)) == 1;
    if (!out.l_aligned && !out.r_aligned)
        throw std::logic_error("rank-one line is neither L- nor R-aligned");
    return out;
}

template <Field F>
struct InvertibilityWitness {
    RankOneElement<F> u;
    Mat<F> x; // u u- a, in L_u, x <=- a
    Mat<F> y; // a u- u, in R_u, y <=- a
};

/// For invertible a: a witness pair per basis rank-one u = E_ij, with
/// x = u u- a in L_u and y = a u- u in R_u, both below a in the minus order.
template <Field F>
std::vector<InvertibilityWitness<F>> invertibility_witnesses(const Mat<F>& a) {
    if (!a.is_square()) throw std::invalid_argument("invertibility_witnesses requires a square matrix");
    const F& f = a.field();
    const int n = a.rows();
    if (rank(a) != n)
        throw std::domain_error("invertibility_witnesses requires an invertible matrix");
    std::vector<InvertibilityWitness<F>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat<F> u = Mat<F>::unit(f, n, i, j);
            Mat<F> u_inv = Mat<F>::unit(f, n, j, i); // E_ji is a {1}-inverse of E_ij
            Mat<F> x = u * u_inv * a;
            Mat<F> y = a * u_inv * u;
            if (!minus_leq(x, a).holds || !minus_leq(y, a).holds)
                throw std::logic_error("invertibility witness failed certification");
            out.push_back({rank_one_of(u), std::move(x), std::move(y)});
        }
    return out;
}

/// Search L_{E_i*} = {e_i z^T} for a nonzero x with x <=- a, by parametrized
/// linear solve: with one fixed a- in G1(a), x = e_i z^T satisfies the minus
/// identities iff a a- e_i = e_i, (a- a)^T z = z and z^T a- e_i = 1.
template <Field F>
std::optional<Mat<F>> left_witness_below(const Mat<F>& a, int i) {
    const F& f = a.field();
    const int n = a.rows();
    Mat<F> g = inner_inverse(a);
    Mat<F> ei(f, n, 1);
    ei(i, 0) = f.one();
    if (!matrices_equal(a * g * ei, ei)) return std::nullopt; // a a- does not fix e_i
    Mat<F> constraint = (g * a).transpose() - Mat<F>::identity(f, n);
    Mat<F> functional = g * ei; // z^T (a- e_i)
    for (const auto& z0 : null_space_basis(constraint)) {
        typename F::Elem val = (z0.transpose() * functional)(0, 0);
        if (f.is_zero(val)) continue;
        Mat<F> z = z0.scaled(f.inv(val));
        Mat<F> x = ei * z.transpose();
        if (!minus_leq(x, a).holds)
            throw std::logic_error("left witness failed certification");
        return x;
    }
    return std::nullopt;
}

/// Mirror search over R_{E_*j} = {z e_j^T}.
template <Field F>
std::optional<Mat<F>> right_witness_below(const Mat<F>& a, int j) {
    const F& f = a.field();
    const int n = a.rows();
    Mat<F> g = inner_inverse(a);
    Mat<F> ej(f, 1, n);
    ej(0, j) = f.one();
    if (!matrices_equal(ej * g * a, ej)) return std::nullopt; // a- a does not fix e_j^T
    // y = z e_j^T <=- a iff additionally (a a-) z = z and e_j^T a- z = 1
    Mat<F> constraint = (a * g) - Mat<F>::identity(f, n);
    for (const auto& z0 : null_space_basis(constraint)) {
        typename F::Elem val = (ej * g * z0)(0, 0);
        if (f.is_zero(val)) continue;
        Mat<F> z = z0.scaled(f.inv(val));
        Mat<F> y = z * ej;
        if (!minus_leq(y, a).holds)
            throw std::logic_error("right witness failed certification");
        return y;
    }
    return std::nullopt;
}

struct RankOneObstruction {
    int index;
    bool left; // true: no witness in L_{E_index,*}; false: none in R_{*,index}
};

/// For singular a there is always a basis direction whose rank-one subspace
/// holds no nonzero element below a; for invertible a the search never finds
/// one.
template <Field F>
std::optional<RankOneObstruction> invertibility_obstruction(const Mat<F>& a) {
    for (int i = 0; i < a.rows(); ++i)
        if (!left_witness_below(a, i)) return RankOneObstruction{i, true};
    for (int j = 0; j < a.cols(); ++j)
        if (!right_witness_below(a, j)) return RankOneObstruction{j, false};
    return std::nullopt;
}

} // namespace matorder
