#pragma once

#include "matorder/geninv.hpp"
#include "matorder/rand.hpp"

namespace matorder {

enum class Relation { Minus, Space, Star };

inline const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Minus: return "minus";
        case Relation::Space: return "space";
        case Relation::Star: return "star";
    }
    return "?";
}

/// Certificate attached to a decided minus relation a <=- b: the idempotents
/// p, q matching a's annihilators, plus inner-inverse witnesses on both sides.
template <Field F>
struct OrderWitness {
    Mat<F> p;       // idempotent, p a = p b
    Mat<F> q;       // idempotent, a q = b q
    Mat<F> a_inner; // a- in G1(a) with a- a = a- b, a a- = b a-
    Mat<F> b_inner; // b- in G1(b) with a = a b- b = b b- a = a b- a
};

template <Field F>
struct OrderReport {
    Relation relation{};
    bool holds = false;
    std::optional<OrderWitness<F>> witness;
    std::vector<std::pair<std::string, bool>> methods; // name -> verdict
    bool ill_conditioned = false;  // float path decided too close to the rank threshold
    bool internal_error = false;   // decision methods disagreed on an exact field
    std::string detail;
};

namespace detail {

template <Field F>
void require_square_pair(const Mat<F>& a, const Mat<F>& b, const char* op) {
    a.require_compatible(b);
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square())
        throw std::invalid_argument(std::string(op) + " requires square matrices of equal shape");
}

// Cross-check policy: exact fields always run every method; the float path
// skips rank-based methods when any involved matrix decides rank within 10x
// tolerance of the threshold, and flags the report instead.
template <Field F>
bool rank_methods_usable(const std::vector<const Mat<F>*>& mats, bool& ill_conditioned) {
    if constexpr (F::is_exact) {
        (void)mats; (void)ill_conditioned;
        return true;
    } else {
        double margin = std::numeric_limits<double>::infinity();
        for (const Mat<F>* m : mats) margin = std::min(margin, rank_decision_margin(*m));
        if (margin <= 10.0 * mats.front()->field().tol) {
            ill_conditioned = true;
            return false;
        }
        return true;
    }
}

template <Field F>
void reconcile(OrderReport<F>& rep) {
    for (const auto& [name, verdict] : rep.methods) {
        if (verdict != rep.holds) {
            if constexpr (F::is_exact) {
                rep.internal_error = true;
                rep.detail = "decision methods disagree: " + name;
            } else {
                rep.ill_conditioned = true;
            }
        }
    }
}

} // namespace detail

/// Decide a <=- b. Primary method: one fixed {1}-inverse b- of b and the
/// identities a = a b- b = b b- a = a b- a (complete because they hold for
/// every b- whenever the relation does). Cross-check: rank(b - a) =
/// rank(b) - rank(a). A positive answer carries a full witness.
template <Field F>
OrderReport<F> minus_leq(const Mat<F>& a, const Mat<F>& b) {
    detail::require_square_pair(a, b, "minus_leq");
    OrderReport<F> rep;
    rep.relation = Relation::Minus;

    Mat<F> b_inner = inner_inverse(b);
    const bool by_identities = matrices_equal(a * b_inner * b, a) &&
                               matrices_equal(b * b_inner * a, a) &&
                               matrices_equal(a * b_inner * a, a);
    rep.methods.emplace_back("inner-inverse-identities", by_identities);
    rep.holds = by_identities;

    Mat<F> diff = b - a;
    if (detail::rank_methods_usable<F>({&a, &b, &diff}, rep.ill_conditioned)) {
        const bool by_rank = rank(diff) == rank(b) - rank(a);
        rep.methods.emplace_back("rank-subtractivity", by_rank);
    }
    detail::reconcile(rep);

    if (rep.holds && !rep.internal_error) {
        Mat<F> p = a * b_inner;
        Mat<F> q = b_inner * a;
        Mat<F> x = inner_inverse(a);
        rep.witness = OrderWitness<F>{p, q, q * x * p, b_inner};
    }
    return rep;
}

/// Decide the space pre-order a <=s b (column and row space inclusion) via
/// a = b b- a and a = a b- b for one {1}-inverse b-, cross-checked against
/// rank-based column/row space inclusions.
template <Field F>
OrderReport<F> space_leq(const Mat<F>& a, const Mat<F>& b) {
    detail::require_square_pair(a, b, "space_leq");
    OrderReport<F> rep;
    rep.relation = Relation::Space;

    Mat<F> b_inner = inner_inverse(b);
    const bool by_identities = matrices_equal(b * b_inner * a, a) && matrices_equal(a * b_inner * b, a);
    rep.methods.emplace_back("inner-inverse-identities", by_identities);
    rep.holds = by_identities;

    if (detail::rank_methods_usable<F>({&a, &b}, rep.ill_conditioned)) {
        const int rank_b = rank(b);
        const bool by_rank = rank(hstack(b, a)) == rank_b && rank(vstack(b, a)) == rank_b;
        rep.methods.emplace_back("space-inclusion-ranks", by_rank);
    }
    detail::reconcile(rep);
    return rep;
}

/// Decide the star order a <=* b: a* a = a* b and a a* = b a*. Undefined over
/// GF(p) (the transpose is not a positive involution there). Cross-checked via
/// the Moore-Penrose form a+ a = a+ b and a a+ = b a+.
template <Field F>
OrderReport<F> star_leq(const Mat<F>& a, const Mat<F>& b) {
    if constexpr (std::is_same_v<F, PrimeField>)
        throw std::domain_error("star order undefined over GF(p)");
    detail::require_square_pair(a, b, "star_leq");
    OrderReport<F> rep;
    rep.relation = Relation::Star;

    Mat<F> a_star = a.adjoint();
    const bool by_star = matrices_equal(a_star * a, a_star * b) && matrices_equal(a * a_star, b * a_star);
    rep.methods.emplace_back("star-identities", by_star);
    rep.holds = by_star;

    Mat<F> a_mp = moore_penrose(a);
    const bool by_mp = matrices_equal(a_mp * a, a_mp * b) && matrices_equal(a * a_mp, b * a_mp);
    rep.methods.emplace_back("moore-penrose-identities", by_mp);
    detail::reconcile(rep);
    return rep;
}

/// Inverse of c1 a + c2 b when a <=- b and b is invertible:
/// (c1 a + c2 b)^-1 = c2^-1 b^-1 + ((c1+c2)^-1 - c2^-1) b^-1 a b^-1.
/// The result is certified by multiplication on both sides before returning.
template <Field F>
Mat<F> combo_inverse(const Mat<F>& a, const Mat<F>& b,
                     const typename F::Elem& c1, const typename F::Elem& c2) {
    detail::require_square_pair(a, b, "combo_inverse");
    const F& f = a.field();
    if (f.is_zero(c2) || f.is_zero(f.add(c1, c2)))
        throw std::domain_error("scalar constraint violated: need c2 != 0 and c1 + c2 != 0");
    auto b_inv = inverse(b);
    if (!b_inv) throw std::domain_error("combination inverse requires b invertible");
    if (!minus_leq(a, b).holds) throw std::domain_error("precondition a <=- b fails");

    const auto c2_inv = f.inv(c2);
    const auto gap = f.sub(f.inv(f.add(c1, c2)), c2_inv);
    Mat<F> result = b_inv->scaled(c2_inv) + (*b_inv * a * *b_inv).scaled(gap);

    Mat<F> combo = a.scaled(c1) + b.scaled(c2);
    Mat<F> id = Mat<F>::identity(f, a.rows());
    if (!matrices_equal(combo * result, id) || !matrices_equal(result * combo, id))
        throw std::logic_error("combination inverse failed certification");
    return result;
}

/// Random comparable pair (a, a + c) with rank(a) = rank_a, rank(c) = rank_c
/// and rank(a + c) = rank_a + rank_c, so a <=- a + c by rank subtractivity.
template <Field F>
std::pair<Mat<F>, Mat<F>> generate_minus_pair(const F& f, int n, int rank_a, int rank_c, Rng& rng) {
    if (rank_a < 0 || rank_c < 0 || rank_a + rank_c > n)
        throw std::invalid_argument("generate_minus_pair: rank_a + rank_c must not exceed n");
    for (;;) {
        Mat<F> a = random_matrix_of_rank(f, n, n, rank_a, rng);
        Mat<F> c = random_matrix_of_rank(f, n, n, rank_c, rng);
        Mat<F> b = a + c;
        if (rank(b) == rank_a + rank_c) return {std::move(a), std::move(b)};
    }
}

template <Field F>
std::pair<Mat<F>, Mat<F>> generate_minus_pair(const F& f, int n, int rank_a, int rank_c, std::uint64_t seed) {
    Rng rng(seed);
    return generate_minus_pair(f, n, rank_a, rank_c, rng);
}

} // namespace matorder
