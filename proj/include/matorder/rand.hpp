#pragma once

#include "matorder/linalg.hpp"

#include <random>

namespace matorder {

/// Deterministic random source. mt19937_64 output is fixed by the standard,
/// and bounded draws use plain modulo, so streams are reproducible across
/// platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    /// Derive an independent stream (for per-trial seeding of samplers).
    std::uint64_t fork_seed() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

inline Rational random_scalar(const RationalField&, Rng& rng) {
    long long num = rng.range(-9, 9);
    long long den = rng.range(1, 4);
    return Rational(num) / Rational(den);
}

inline PrimeField::Elem random_scalar(const PrimeField& f, Rng& rng) {
    return static_cast<PrimeField::Elem>(rng.below(f.p));
}

inline Complex random_scalar(const ComplexField&, Rng& rng) {
    auto grid = [&]() { return static_cast<double>(rng.range(-16, 16)) / 8.0; };
    return {grid(), grid()};
}

template <Field F>
typename F::Elem random_nonzero_scalar(const F& f, Rng& rng) {
    for (;;) {
        auto v = random_scalar(f, rng);
        if (!f.is_zero(v)) return v;
    }
}

template <Field F>
Mat<F> random_matrix(const F& f, int rows, int cols, Rng& rng) {
    Mat<F> m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
    return m;
}

/// Matrix of exact rank r, built as a product of full-rank rows x r and
/// r x cols factors (re-sampled until both factors reach rank r).
template <Field F>
Mat<F> random_matrix_of_rank(const F& f, int rows, int cols, int r, Rng& rng) {
    if (r < 0 || r > std::min(rows, cols))
        throw std::invalid_argument("requested rank out of range");
    if (r == 0) return Mat<F>::zero(f, rows, cols);
    for (;;) {
        Mat<F> lhs = random_matrix(f, rows, r, rng);
        if (rank(lhs) != r) continue;
        Mat<F> rhs = random_matrix(f, r, cols, rng);
        if (rank(rhs) != r) continue;
        Mat<F> m = lhs * rhs;
        if (rank(m) == r) return m; // float path can lose rank to cancellation
    }
}

template <Field F>
Mat<F> random_matrix_of_rank(const F& f, int rows, int cols, int r, std::uint64_t seed) {
    Rng rng(seed);
    return random_matrix_of_rank(f, rows, cols, r, rng);
}

template <Field F>
Mat<F> random_invertible(const F& f, int n, Rng& rng) {
    return random_matrix_of_rank(f, n, n, n, rng);
}

} // namespace matorder
