#pragma once

#include "matorder/structure.hpp"

namespace matorder {

/// Linear map on M_n stored as its n^2 x n^2 coefficient matrix acting on
/// column-major vectorizations.
template <Field F>
class MatrixLinearMap {
public:
    explicit MatrixLinearMap(Mat<F> coeffs) : coeffs_(std::move(coeffs)) {
        if (!coeffs_.is_square()) throw std::invalid_argument("map coefficients must be square");
        n_ = static_cast<int>(std::lround(std::sqrt(static_cast<double>(coeffs_.rows()))));
        if (n_ * n_ != coeffs_.rows())
            throw std::invalid_argument("map coefficient size must be a perfect square");
    }

    static MatrixLinearMap identity(const F& f, int n) {
        return MatrixLinearMap(Mat<F>::identity(f, n * n));
    }

    /// X -> X^T.
    static MatrixLinearMap transposer(const F& f, int n) {
        return MatrixLinearMap(commutation_matrix(f, n));
    }

    /// X -> T X S, coefficients S^T (x) T.
    static MatrixLinearMap sandwich(const Mat<F>& t, const Mat<F>& s) {
        return MatrixLinearMap(kron(s.transpose(), t));
    }

    /// X -> T X^T S.
    static MatrixLinearMap sandwich_transpose(const Mat<F>& t, const Mat<F>& s) {
        return MatrixLinearMap(kron(s.transpose(), t) * commutation_matrix(t.field(), t.rows()));
    }

    int n() const { return n_; }
    const F& field() const { return coeffs_.field(); }
    const Mat<F>& coeffs() const { return coeffs_; }

    Mat<F> apply(const Mat<F>& x) const {
        if (x.rows() != n_ || x.cols() != n_)
            throw std::invalid_argument("apply_map: argument is not " + std::to_string(n_) + "x" + std::to_string(n_));
        coeffs_.require_compatible(x);
        return unvec_cm(coeffs_ * vec_cm(x), n_, n_);
    }

    /// this after inner: x -> this(inner(x)).
    MatrixLinearMap compose(const MatrixLinearMap& inner) const {
        return MatrixLinearMap(coeffs_ * inner.coeffs_);
    }

    std::optional<MatrixLinearMap> inverted() const {
        auto inv = inverse(coeffs_);
        if (!inv) return std::nullopt;
        return MatrixLinearMap(std::move(*inv));
    }

    bool equals(const MatrixLinearMap& o) const { return matrices_equal(coeffs_, o.coeffs_); }

private:
    Mat<F> coeffs_;
    int n_;
};

namespace detail {

template <Field F>
typename F::Elem one_half(const F& f) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (f.p == 2) throw std::domain_error("Jordan product undefined (division by 2)");
    }
    return f.inv(f.add(f.one(), f.one()));
}

template <Field F>
Mat<F> jordan_product(const Mat<F>& x, const Mat<F>& y, const typename F::Elem& half) {
    return (x * y + y * x).scaled(half);
}

template <Field F>
Mat<F> jordan_triple(const Mat<F>& x, const Mat<F>& y, const Mat<F>& z, const typename F::Elem& half) {
    return (x * y * z + z * y * x).scaled(half);
}

} // namespace detail

/// Does the map satisfy phi(x o y) = phi(x) o phi(y) for the Jordan product
/// x o y = (xy + yx)/2? Decided exactly on all basis pairs.
template <Field F>
bool jordan_check(const MatrixLinearMap<F>& phi) {
    const F& f = phi.field();
    const int n = phi.n();
    const auto half = detail::one_half(f);
    std::vector<Mat<F>> img;
    img.reserve(static_cast<std::size_t>(n * n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) img.push_back(phi.apply(Mat<F>::unit(f, n, i, j)));
    auto unit_at = [&](int i, int j) { return Mat<F>::unit(f, n, i, j); };
    for (int a = 0; a < n * n; ++a)
        for (int b = 0; b < n * n; ++b) {
            Mat<F> ea = unit_at(a % n, a / n), eb = unit_at(b % n, b / n);
            Mat<F> lhs = phi.apply(detail::jordan_product(ea, eb, half));
            Mat<F> rhs = detail::jordan_product(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)], half);
            if (!matrices_equal(lhs, rhs)) return false;
        }
    return true;
}

struct TripleCheckResult {
    bool holds = false;
    bool exhaustive = false;
    long long checked = 0;
    explicit operator bool() const { return holds; }
};

/// Jordan triple homomorphism test phi({x,y,z}) = {phi x, phi y, phi z} with
/// {x,y,z} = (xyz + zyx)/2. Exhaustive over all n^6 basis triples for n <= 6;
/// beyond that falls back to seeded random triples and reports the count.
template <Field F>
TripleCheckResult jordan_triple_check(const MatrixLinearMap<F>& phi, std::uint64_t seed = 1) {
    const F& f = phi.field();
    const int n = phi.n();
    const auto half = detail::one_half(f);
    const int nn = n * n;
    std::vector<Mat<F>> units, img;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            units.push_back(Mat<F>::unit(f, n, i, j));
            img.push_back(phi.apply(units.back()));
        }
    TripleCheckResult res;
    if (n <= 6) {
        res.exhaustive = true;
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b)
                for (int c = 0; c < nn; ++c) {
                    ++res.checked;
                    Mat<F> lhs = phi.apply(detail::jordan_triple(units[static_cast<std::size_t>(a)], units[static_cast<std::size_t>(b)], units[static_cast<std::size_t>(c)], half));
                    Mat<F> rhs = detail::jordan_triple(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)], img[static_cast<std::size_t>(c)], half);
                    if (!matrices_equal(lhs, rhs)) return res;
                }
        res.holds = true;
        return res;
    }
    Rng rng(seed);
    const long long trials = 4096;
    for (long long t = 0; t < trials; ++t) {
        ++res.checked;
        Mat<F> x = random_matrix(f, n, n, rng), y = random_matrix(f, n, n, rng), z = random_matrix(f, n, n, rng);
        Mat<F> lhs = phi.apply(detail::jordan_triple(x, y, z, half));
        Mat<F> rhs = detail::jordan_triple(phi.apply(x), phi.apply(y), phi.apply(z), half);
        if (!matrices_equal(lhs, rhs)) return res;
    }
    res.holds = true;
    return res;
}

template <Field F>
struct PreserveVerdict {
    bool passed = false;
    long long trials = 0;
    std::optional<std::pair<Mat<F>, Mat<F>>> counterexample; // (a, b) with a <= b but phi(a) !<= phi(b)
    std::string note;
};

/// Sampled test of "a <=- b implies phi(a) <=- phi(b)". Pairs are drawn from
/// generate_minus_pair, stratified over all rank splits (rank_a, rank_c).
/// Refutation is certain; passing is statistical evidence only.
template <Field F>
PreserveVerdict<F> preserves_minus_sampled(const MatrixLinearMap<F>& phi, long long trials, std::uint64_t seed) {
    const F& f = phi.field();
    const int n = phi.n();
    Rng rng(seed);
    std::vector<std::pair<int, int>> splits;
    for (int ra = 0; ra <= n; ++ra)
        for (int rc = 0; ra + rc <= n; ++rc) splits.emplace_back(ra, rc);
    PreserveVerdict<F> verdict;
    for (long long t = 0; t < trials; ++t) {
        auto [ra, rc] = splits[static_cast<std::size_t>(t % static_cast<long long>(splits.size()))];
        auto [a, b] = generate_minus_pair(f, n, ra, rc, rng);
        ++verdict.trials;
        if (!minus_leq(phi.apply(a), phi.apply(b)).holds) {
            verdict.counterexample = {std::move(a), std::move(b)};
            return verdict;
        }
    }
    verdict.passed = true;
    return verdict;
}

/// Sampled test of "a <=s b implies phi(a) <=s phi(b)", with pairs b x b <=s b.
/// When the map is surjective (invertible coefficients) also spot-checks that
/// sampled invertibles keep invertible images.
template <Field F>
PreserveVerdict<F> preserves_space_sampled(const MatrixLinearMap<F>& phi, long long trials, std::uint64_t seed) {
    const F& f = phi.field();
    const int n = phi.n();
    Rng rng(seed);
    PreserveVerdict<F> verdict;
    for (long long t = 0; t < trials; ++t) {
        int rank_b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
        Mat<F> b = random_matrix_of_rank(f, n, n, rank_b, rng);
        Mat<F> a = b * random_matrix(f, n, n, rng) * b;
        ++verdict.trials;
        if (!space_leq(a, b).holds) continue; // generator guarantees it; keep the guard cheap
        if (!space_leq(phi.apply(a), phi.apply(b)).holds) {
            verdict.counterexample = {std::move(a), std::move(b)};
            return verdict;
        }
    }
    if (rank(phi.coeffs()) == n * n) {
        for (int t = 0; t < 16; ++t) {
            Mat<F> u = random_invertible(f, n, rng);
            if (rank(phi.apply(u)) != n) {
                verdict.counterexample = {u, Mat<F>::identity(f, n)};
                verdict.note = "surjective map dropped invertibility on a sample";
                return verdict;
            }
        }
    }
    verdict.passed = true;
    return verdict;
}

/// With phi(I) idempotent, checks phi(p)^2 = phi(p) on sampled idempotents
/// p = S diag(0/1) S^-1.
template <Field F>
bool idempotent_preservation_check(const MatrixLinearMap<F>& phi, int samples, std::uint64_t seed = 7) {
    const F& f = phi.field();
    const int n = phi.n();
    Mat<F> phi_id = phi.apply(Mat<F>::identity(f, n));
    if (!matrices_equal(phi_id * phi_id, phi_id))
        throw std::domain_error("idempotent preservation check requires phi(I) idempotent");
    Rng rng(seed);
    for (int t = 0; t < samples; ++t) {
        Mat<F> s = random_invertible(f, n, rng);
        Mat<F> d(f, n, n);
        for (int i = 0; i < n; ++i)
            if (rng.below(2)) d(i, i) = f.one();
        Mat<F> p = s * d * *inverse(s);
        Mat<F> image = phi.apply(p);
        if (!matrices_equal(image * image, image)) return false;
    }
    return true;
}

template <Field F>
struct CanonicalPreserverForm {
    enum class Kind { Isomorphism, AntiIsomorphism };
    Kind kind;
    Mat<F> t;
    Mat<F> s;

    /// Rebuild the map this form describes.
    MatrixLinearMap<F> to_map() const {
        return kind == Kind::Isomorphism ? MatrixLinearMap<F>::sandwich(t, s)
                                         : MatrixLinearMap<F>::sandwich_transpose(t, s);
    }
};

template <Field F>
struct DecomposeOutcome {
    std::optional<CanonicalPreserverForm<F>> form;
    std::string error; // empty on success
    std::optional<std::pair<Mat<F>, Mat<F>>> refutation; // failing pair when sampling refuted
    bool ok() const { return form.has_value(); }
};

namespace detail {

template <Field F>
int pick_nonzero_column(const Mat<F>& p) {
    if constexpr (F::is_exact) {
        for (int j = 0; j < p.cols(); ++j)
            for (int i = 0; i < p.rows(); ++i)
                if (!p.field().is_zero(p(i, j))) return j;
        return -1;
    } else {
        int best = -1;
        double best_norm = 0.0;
        for (int j = 0; j < p.cols(); ++j) {
            double s = 0.0;
            for (int i = 0; i < p.rows(); ++i) s += std::norm(p(i, j));
            if (s > best_norm) { best_norm = s; best = j; }
        }
        return best_norm > 0 ? best : -1;
    }
}

} // namespace detail

/// Decompose a bijective bidirectional minus-order preserver into canonical
/// form: X -> T X S or X -> T X^T S with T, S invertible. The sampled
/// preservation test runs on the map and its inverse first; then psi =
/// phi(I)^-1 phi is classified as multiplicative or anti-multiplicative on
/// matrix units and the conjugating matrix is recovered column by column.
/// Over exact fields the scalar gauge in (T, S) is normalized so that the
/// first nonzero entry of T is one.
template <Field F>
DecomposeOutcome<F> decompose_preserver(const MatrixLinearMap<F>& phi,
                                        long long trial_budget = 60,
                                        std::uint64_t seed = 1) {
    using Form = CanonicalPreserverForm<F>;
    const F& f = phi.field();
    const int n = phi.n();
    DecomposeOutcome<F> out;

    auto inv_map = phi.inverted();
    if (!inv_map) {
        out.error = "map is not bijective";
        return out;
    }
    PreserveVerdict<F> forward = preserves_minus_sampled(phi, trial_budget, seed);
    if (!forward.passed) {
        out.error = "not a bidirectional minus-order preserver: forward sampling refuted";
        out.refutation = forward.counterexample;
        return out;
    }
    PreserveVerdict<F> backward = preserves_minus_sampled(*inv_map, trial_budget, seed + 1);
    if (!backward.passed) {
        out.error = "not a bidirectional minus-order preserver: inverse sampling refuted";
        out.refutation = backward.counterexample;
        return out;
    }

    Mat<F> phi_one = phi.apply(Mat<F>::identity(f, n));
    auto phi_one_inv = inverse(phi_one);
    if (!phi_one_inv) {
        out.error = "not a bidirectional minus-order preserver (phi(1) is singular)";
        return out;
    }
    // psi(X) = phi(1)^-1 phi(X); left multiplication has coefficients I (x) M.
    MatrixLinearMap<F> psi =
        MatrixLinearMap<F>(kron(Mat<F>::identity(f, n), *phi_one_inv)).compose(phi);

    typename Form::Kind kind;
    if (n == 1) {
        kind = Form::Kind::Isomorphism;
    } else {
        auto psi_unit = [&](int i, int j) { return psi.apply(Mat<F>::unit(f, n, i, j)); };
        if (n >= 3) {
            Mat<F> probe = psi_unit(0, 1) * psi_unit(1, 2);
            if (matrices_equal(probe, psi_unit(0, 2)))
                kind = Form::Kind::Isomorphism;
            else if (probe.is_zero())
                kind = Form::Kind::AntiIsomorphism;
            else {
                out.error = "map is not of canonical form";
                return out;
            }
        } else {
            Mat<F> probe = psi_unit(0, 1) * psi_unit(1, 0);
            if (matrices_equal(probe, psi_unit(0, 0)))
                kind = Form::Kind::Isomorphism;
            else if (matrices_equal(probe, psi_unit(1, 1)))
                kind = Form::Kind::AntiIsomorphism;
            else {
                out.error = "map is not of canonical form";
                return out;
            }
        }
    }

    // theta is conjugation by U; in the anti case psi(X^T) = U X U^-1.
    auto theta = [&](int i, int j) {
        return kind == Form::Kind::Isomorphism ? psi.apply(Mat<F>::unit(f, n, i, j))
                                               : psi.apply(Mat<F>::unit(f, n, j, i));
    };
    Mat<F> p = theta(0, 0);
    const int col = detail::pick_nonzero_column(p);
    if (col < 0) {
        out.error = "map is not of canonical form";
        return out;
    }
    Mat<F> u(f, n, n);
    Mat<F> u1 = p.col(col);
    for (int i = 0; i < n; ++i) {
        Mat<F> ui = i == 0 ? u1 : theta(i, 0) * u1;
        for (int r = 0; r < n; ++r) u(r, i) = ui(r, 0);
    }
    auto u_inv = inverse(u);
    if (!u_inv) {
        out.error = "map is not of canonical form";
        return out;
    }

    Mat<F> t = phi_one * u;
    Mat<F> s = *u_inv;
    // gauge normalization: first nonzero entry of T scaled to one
    typename F::Elem lambda = f.zero();
    for (int i = 0; i < n && f.is_zero(lambda); ++i)
        for (int j = 0; j < n && f.is_zero(lambda); ++j)
            if (!f.is_zero(t(i, j))) lambda = t(i, j);
    if (!f.is_zero(lambda)) {
        t = t.scaled(f.inv(lambda));
        s = s.scaled(lambda);
    }

    Form form{kind, std::move(t), std::move(s)};
    MatrixLinearMap<F> rebuilt = form.to_map();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat<F> e = Mat<F>::unit(f, n, i, j);
            if (!matrices_equal(phi.apply(e), rebuilt.apply(e))) {
                out.error = "map is not of canonical form";
                return out;
            }
        }
    out.form = std::move(form);
    return out;
}

} // namespace matorder
