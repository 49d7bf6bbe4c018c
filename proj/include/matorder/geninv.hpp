#pragma once

#include "matorder/linalg.hpp"

namespace matorder {

/// Moore-Penrose inverse. Exact fields use the full-rank-factorization formula
/// a+ = G* (G G*)^-1 (F* F)^-1 F*; the complex path uses the SVD. Over GF(p)
/// the Gram matrices can be singular (isotropic columns), in which case no
/// Moore-Penrose inverse exists for the transpose involution and a
/// domain_error is raised.
template <Field F>
Mat<F> moore_penrose(const Mat<F>& a) {
    if (a.is_zero()) return Mat<F>::zero(a.field(), a.cols(), a.rows());
    if constexpr (F::is_exact) {
        auto [fac_f, fac_g] = rank_factorization(a);
        auto gram_g = inverse(fac_g * fac_g.adjoint());
        auto gram_f = inverse(fac_f.adjoint() * fac_f);
        if (!gram_g || !gram_f)
            throw std::domain_error("Moore-Penrose undefined over this field");
        return fac_g.adjoint() * *gram_g * *gram_f * fac_f.adjoint();
    } else {
        ComplexSvd s = svd(a);
        Mat<F> pinv(a.field(), a.cols(), a.rows());
        for (int k = 0; k < s.rank; ++k) {
            const double inv_sigma = 1.0 / s.sigma[static_cast<std::size_t>(k)];
            for (int i = 0; i < a.cols(); ++i)
                for (int j = 0; j < a.rows(); ++j)
                    pinv(i, j) += s.v(i, k) * std::conj(s.u(j, k)) * inv_sigma;
        }
        return pinv;
    }
}

/// Some {1}-inverse g with a g a = a. Every matrix over a field is regular;
/// the zero matrix gets the zero inverse. Over GF(p), when the Moore-Penrose
/// route hits a singular Gram matrix, falls back to solving a x a = a
/// directly through the vectorized Kronecker system.
template <Field F>
Mat<F> inner_inverse(const Mat<F>& a) {
    if (a.is_zero()) return Mat<F>::zero(a.field(), a.cols(), a.rows());
    if constexpr (std::is_same_v<F, PrimeField>) {
        try {
            return moore_penrose(a);
        } catch (const std::domain_error&) {
            auto x = solve_linear(kron(a.transpose(), a), vec_cm(a));
            if (!x) throw std::logic_error("a x a = a unsolvable for nonzero matrix"); // cannot happen over a field
            return unvec_cm(*x, a.cols(), a.rows());
        }
    } else {
        return moore_penrose(a);
    }
}

/// g a g for a {1}-inverse g; the result is a {1,2}-inverse of a.
template <Field F>
Mat<F> reflexive_inverse(const Mat<F>& a, const Mat<F>& g) {
    if (!matrices_equal(a * g * a, a)) throw std::domain_error("not a {1}-inverse");
    return g * a * g;
}

/// Basis of D1(a) = {x : a x a = 0}, the difference set of {1}-inverses,
/// computed as the null space of x -> a x a through column-major
/// vectorization: vec(a x a) = (a^T (x) a) vec(x).
template <Field F>
std::vector<Mat<F>> d1_basis(const Mat<F>& a) {
    std::vector<Mat<F>> basis;
    for (const auto& v : null_space_basis(kron(a.transpose(), a)))
        basis.push_back(unvec_cm(v, a.cols(), a.rows()));
    return basis;
}

/// The affine family G1(a) = base + span(d1): one particular {1}-inverse plus
/// a basis of D1(a).
template <Field F>
struct InverseFamily {
    Mat<F> subject; // a
    Mat<F> base;    // a particular {1}-inverse of a
    std::vector<Mat<F>> d1;

    Mat<F> member(const std::vector<typename F::Elem>& coeffs) const {
        if (coeffs.size() != d1.size())
            throw std::invalid_argument("coefficient count does not match D1 basis");
        Mat<F> m = base;
        for (std::size_t k = 0; k < d1.size(); ++k)
            m = m + d1[k].scaled(coeffs[k]);
        return m;
    }
};

template <Field F>
InverseFamily<F> g1_family(const Mat<F>& a) {
    return {a, inner_inverse(a), d1_basis(a)};
}

template <Field F>
bool g1_contains(const Mat<F>& a, const Mat<F>& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw std::invalid_argument("g1_contains shape mismatch: " + a.shape_str() + " vs " + x.shape_str());
    return matrices_equal(a * x * a, a);
}

/// Is x a member of G1^b(a) = {a- in G1(a) : a a- = b a-, a- a = a- b}?
template <Field F>
bool g1b_check(const Mat<F>& a, const Mat<F>& b, const Mat<F>& x) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("g1b_check shape mismatch");
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw std::invalid_argument("g1b_check shape mismatch");
    return matrices_equal(a * x * a, a) && matrices_equal(a * x, b * x) && matrices_equal(x * a, x * b);
}

/// The G1^b(a) member b- - b-(b-a)b- attached to a {1}-inverse b- of b.
/// The precondition a <=- b is decided with the supplied b- itself: the three
/// identities a = a b- b = b b- a = a b- a hold for every {1}-inverse of b
/// exactly when the minus relation holds, so one witness is a complete test.
template <Field F>
Mat<F> g1b_member(const Mat<F>& a, const Mat<F>& b, const Mat<F>& b_inner) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("g1b_member shape mismatch");
    if (!matrices_equal(b * b_inner * b, b))
        throw std::domain_error("g1b_member: b_inner is not a {1}-inverse of b");
    if (!matrices_equal(a * b_inner * b, a))
        throw std::domain_error("g1b_member: precondition a <=- b fails (a != a b- b)");
    if (!matrices_equal(b * b_inner * a, a))
        throw std::domain_error("g1b_member: precondition a <=- b fails (a != b b- a)");
    if (!matrices_equal(a * b_inner * a, a))
        throw std::domain_error("g1b_member: precondition a <=- b fails (a != a b- a)");
    Mat<F> result = b_inner - b_inner * (b - a) * b_inner;
    // membership and the intertwining identities are certified before returning
    if (!g1b_check(a, b, result))
        throw std::logic_error("g1b_member output failed its membership identities");
    if (!matrices_equal(b_inner * a, result * a) || !matrices_equal(a * b_inner, a * result))
        throw std::logic_error("g1b_member output failed the b-a intertwining identities");
    return result;
}

} // namespace matorder
