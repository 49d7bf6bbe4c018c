#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matorder/geninv.hpp"
#include "matorder/io.hpp"
#include "matorder/rand.hpp"

using namespace matorder;

namespace {

const RationalField QF{};

MatQ matq(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Rational>> conv;
    for (const auto& r : rows) {
        conv.emplace_back();
        for (long long v : r) conv.back().emplace_back(v);
    }
    return MatQ::from_rows(QF, conv);
}

// Independent rank oracle: fraction-free Bareiss elimination on the integer
// matrix obtained by clearing denominators row by row. Shares no code with
// the library's reduced_row_echelon path.
int bareiss_rank(const MatQ& m) {
    using Int = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(rows), std::vector<Int>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
        Int lcm = 1;
        for (int j = 0; j < cols; ++j) {
            Int den = denominator(m(i, j));
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (int j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = numerator(m(i, j)) * (lcm / denominator(m(i, j)));
    }
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rank)]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)] * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                     a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) /
                    prev;
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = 0;
        }
        prev = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("rank on hand-checked matrices") {
    CHECK(rank(MatQ::zero(QF, 2, 2)) == 0);
    CHECK(rank(MatQ::identity(QF, 2)) == 2);
    CHECK(rank(matq({{1, 2}, {2, 4}})) == 1); // second row is twice the first
    CHECK(rank(matq({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);

    PrimeField gf2(2);
    MatGF a = MatGF::from_rows(gf2, {{1, 1}, {1, 1}});
    CHECK(rank(a) == 1);
    CHECK(rank(MatGF::identity(gf2, 3)) == 3);
}

TEST_CASE("rank on the complex float path uses singular values") {
    ComplexField cf(1e-10);
    CHECK(rank(MatC::zero(cf, 3, 3)) == 0);
    CHECK(rank(MatC::identity(cf, 4)) == 4);
    MatC m = MatC::from_rows(cf, {{{1, 0}, {2, 0}}, {{2, 0}, {4, 0}}});
    CHECK(rank(m) == 1);
    // tiny second singular value below the relative threshold
    MatC nearly = MatC::from_rows(cf, {{{1, 0}, {0, 0}}, {{0, 0}, {1e-13, 0}}});
    CHECK(rank(nearly) == 1);
}

TEST_CASE("rank_factorization splits into pivot columns times RREF rows") {
    auto [f1, g1] = rank_factorization(MatQ::identity(QF, 2));
    CHECK(f1 == MatQ::identity(QF, 2));
    CHECK(g1 == MatQ::identity(QF, 2));

    MatQ m = matq({{1, 2}, {2, 4}});
    auto [f2, g2] = rank_factorization(m);
    CHECK(f2 == matq({{1}, {2}}));
    CHECK(g2 == matq({{1, 2}}));
    CHECK(f2 * g2 == m);
    CHECK(rank(f2) == 1);
    CHECK(rank(g2) == 1);

    MatQ col = matq({{3}, {0}});
    auto [f3, g3] = rank_factorization(col);
    CHECK(f3 * g3 == col);
    CHECK(f3 == matq({{3}, {0}}));
    CHECK(g3 == matq({{1}}));

    CHECK_THROWS_WITH_AS(rank_factorization(MatQ::zero(QF, 2, 3)), "zero has no rank factorization",
                         std::domain_error);
}

TEST_CASE("null_space_basis") {
    CHECK(null_space_basis(MatQ::identity(QF, 2)).empty());
    CHECK(null_space_basis(MatQ::zero(QF, 2, 2)).size() == 2);

    auto basis = null_space_basis(matq({{1, 2}, {2, 4}}));
    REQUIRE(basis.size() == 1);
    // proportional to (-2, 1)
    CHECK(basis[0](0, 0) * Rational(1) == basis[0](1, 0) * Rational(-2));

    ComplexField cf(1e-10);
    MatC m = MatC::from_rows(cf, {{{1, 0}, {2, 0}}, {{2, 0}, {4, 0}}});
    auto cbasis = null_space_basis(m);
    REQUIRE(cbasis.size() == 1);
    CHECK(matrices_equal(m * cbasis[0], MatC::zero(cf, 2, 1)));
}

TEST_CASE("random_matrix_of_rank hits the requested rank deterministically") {
    Rng rng(17);
    CHECK(random_matrix_of_rank(QF, 3, 3, 0, rng).is_zero());
    CHECK(rank(random_matrix_of_rank(QF, 3, 3, 3, rng)) == 3);
    CHECK(rank(random_matrix_of_rank(QF, 4, 2, 1, rng)) == 1);
    CHECK_THROWS_AS(random_matrix_of_rank(QF, 3, 3, 4, rng), std::invalid_argument);

    MatQ a = random_matrix_of_rank(QF, 4, 4, 2, std::uint64_t{99});
    MatQ b = random_matrix_of_rank(QF, 4, 4, 2, std::uint64_t{99});
    CHECK(a == b);

    PrimeField gf3(3);
    CHECK(rank(random_matrix_of_rank(gf3, 4, 4, 2, rng)) == 2);
    ComplexField cf(1e-10);
    CHECK(rank(random_matrix_of_rank(cf, 4, 4, 2, rng)) == 2);
}

TEST_CASE("rank is submultiplicative on sampled products") {
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng.below(4));
        MatQ a = random_matrix_of_rank(QF, n, n, static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1)), rng);
        MatQ b = random_matrix_of_rank(QF, n, n, static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1)), rng);
        CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
    }
}

TEST_CASE("row-reduction rank agrees with factorization dimension on 500 random rationals") {
    Rng rng(2024);
    for (int t = 0; t < 500; ++t) {
        int rows = 1 + static_cast<int>(rng.below(6));
        int cols = 1 + static_cast<int>(rng.below(6));
        int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(rows, cols)) + 1));
        MatQ m = random_matrix_of_rank(QF, rows, cols, r, rng);
        CHECK(rank(m) == r);
        if (!m.is_zero()) {
            auto [f, g] = rank_factorization(m);
            CHECK(f.cols() == rank(m));
            CHECK(f * g == m);
        }
        CHECK(bareiss_rank(m) == rank(m));
    }
}

TEST_CASE("hermitian eigensolver reconstructs and stays unitary") {
    ComplexField cf(1e-10);
    // [[2, i], [-i, 2]] has eigenvalues 3 and 1
    MatC h = MatC::from_rows(cf, {{{2, 0}, {0, 1}}, {{0, -1}, {2, 0}}});
    HermitianEigen eig = hermitian_eigen(h);
    CHECK(eig.values[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(eig.values[1] == doctest::Approx(1.0).epsilon(1e-12));
    MatC lambda = MatC::zero(cf, 2, 2);
    lambda(0, 0) = {eig.values[0], 0};
    lambda(1, 1) = {eig.values[1], 0};
    CHECK(matrices_equal(h * eig.vectors, eig.vectors * lambda));
    CHECK(matrices_equal(eig.vectors.adjoint() * eig.vectors, MatC::identity(cf, 2)));

    Rng rng(3);
    MatC a = random_matrix(cf, 5, 5, rng);
    MatC gram = a.adjoint() * a;
    HermitianEigen e2 = hermitian_eigen(gram);
    MatC l2 = MatC::zero(cf, 5, 5);
    for (int i = 0; i < 5; ++i) l2(i, i) = {e2.values[static_cast<std::size_t>(i)], 0};
    CHECK(matrices_equal(gram * e2.vectors, e2.vectors * l2));
    CHECK(matrices_equal(e2.vectors.adjoint() * e2.vectors, MatC::identity(cf, 5)));
}

TEST_CASE("svd factors and ranks random complex matrices") {
    ComplexField cf(1e-10);
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        int r = static_cast<int>(rng.below(4));
        MatC m = random_matrix_of_rank(cf, 5, 4, r, rng);
        ComplexSvd s = svd(m);
        CHECK(s.rank == r);
        if (r > 0) {
            MatC rebuilt = MatC::zero(cf, 5, 4);
            for (int k = 0; k < r; ++k)
                rebuilt = rebuilt + s.u.col(k).scaled({s.sigma[static_cast<std::size_t>(k)], 0}) * s.v.col(k).adjoint();
            CHECK(matrices_equal(rebuilt, m));
        }
    }
}

TEST_CASE("solve_linear and inverse") {
    MatQ a = matq({{1, 2}, {3, 4}});
    auto x = solve_linear(a, MatQ::identity(QF, 2));
    REQUIRE(x.has_value());
    CHECK(a * *x == MatQ::identity(QF, 2));
    CHECK(inverse(matq({{1, 2}, {2, 4}})) == std::nullopt);

    // inconsistent system
    CHECK(solve_linear(matq({{1, 1}, {1, 1}}), matq({{0}, {1}})) == std::nullopt);

    // underdetermined with assigned free variables
    MatQ wide = matq({{1, 2, 3}});
    auto sol = solve_linear(wide, matq({{6}}), [](int, int) { return Rational(1); });
    REQUIRE(sol.has_value());
    CHECK(wide * *sol == matq({{6}}));
    CHECK((*sol)(1, 0) == 1);
    CHECK((*sol)(2, 0) == 1);
}

TEST_CASE("mixed-field operations are rejected") {
    PrimeField gf2(2), gf3(3);
    MatGF a = MatGF::identity(gf2, 2);
    MatGF b = MatGF::identity(gf3, 2);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("kron and vec obey the vectorization identity") {
    Rng rng(23);
    MatQ a = random_matrix(QF, 3, 3, rng);
    MatQ x = random_matrix(QF, 3, 3, rng);
    MatQ b = random_matrix(QF, 3, 3, rng);
    CHECK(kron(b.transpose(), a) * vec_cm(x) == vec_cm(a * x * b));
    CHECK(commutation_matrix(QF, 3) * vec_cm(x) == vec_cm(x.transpose()));
}

TEST_CASE("matrix text format round-trips") {
    AnyMat m = matq({{1, 2}, {2, 4}});
    std::get<MatQ>(m)(0, 0) = Rational(-7) / 3;
    std::string text = write_matrix(m);
    AnyMat back = read_matrix_string(text);
    CHECK(std::get<MatQ>(back) == std::get<MatQ>(m));
    CHECK(write_matrix(back) == text);

    PrimeField gf5(5);
    AnyMat g = MatGF::from_rows(gf5, {{0, 4}, {3, 2}});
    CHECK(std::get<MatGF>(read_matrix_string(write_matrix(g))) == std::get<MatGF>(g));

    ComplexField cf(1e-10);
    MatC c = MatC::from_rows(cf, {{{1.5, -2.25}, {0, 1}}});
    AnyMat cc = c;
    AnyMat cback = read_matrix_string(write_matrix(cc));
    CHECK(std::get<MatC>(cback) == c); // %.17g round-trips doubles exactly

    CHECK_THROWS_AS(read_matrix_string("2 2 F\n1 2\n3 4\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_matrix_string("2 2 Q\n1 2\n3\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_matrix_string("2 2 GF 6\n1 2\n3 4\n"), std::invalid_argument);
}
