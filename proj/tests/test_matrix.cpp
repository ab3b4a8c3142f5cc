#include "doctest.h"

#include <cmath>

#include "ngd/errors.hpp"
#include "ngd/matrix.hpp"
#include "ngd/rng.hpp"
#include "test_helpers.hpp"

using ngd::Matrix;

TEST_CASE("multiply matches a hand product") {
    const Matrix a = test::matrix({{1, 2}, {3, 4}});
    const Matrix b = test::matrix({{5, 6}, {7, 8}});
    const Matrix c = ngd::multiply(a, b);
    CHECK(c(0, 0) == 19.0);
    CHECK(c(0, 1) == 22.0);
    CHECK(c(1, 0) == 43.0);
    CHECK(c(1, 1) == 50.0);
}

TEST_CASE("multiply by identity is exact") {
    const Matrix a = test::matrix({{1.5, -2.25, 3}, {0, 4, 5}, {6, 7, 8.125}});
    CHECK(ngd::multiply(a, Matrix::identity(3)) == a);
    CHECK(ngd::multiply(Matrix::identity(3), a) == a);
}

TEST_CASE("multiply rejects mismatched shapes") {
    CHECK_THROWS_AS(ngd::multiply(Matrix(2, 3), Matrix(2, 3)), ngd::Error);
}

TEST_CASE("parallel and serial multiply agree bitwise") {
    ngd::CounterRng rng(7, 0);
    Matrix a(64, 64), b(64, 64);
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j) {
            a(i, j) = rng.next_double() - 0.5;
            b(i, j) = rng.next_double() - 0.5;
        }
    CHECK(ngd::multiply(a, b) == ngd::serial::multiply(a, b));
}

TEST_CASE("transpose and norms") {
    const Matrix a = test::matrix({{1, 2, 3}, {4, 5, 6}});
    const Matrix t = ngd::transpose(a);
    CHECK(t.rows() == 3);
    CHECK(t(2, 1) == 6.0);
    CHECK(ngd::max_abs(a) == 6.0);
    CHECK(ngd::frobenius_norm(test::matrix({{3, 4}, {0, 0}})) == doctest::Approx(5.0));
    CHECK(ngd::max_abs_diff(a, a) == 0.0);
}

TEST_CASE("is_symmetric uses a relative tolerance") {
    Matrix m = test::matrix({{1, 2}, {2, 1}});
    CHECK(ngd::is_symmetric(m, 1e-12));
    m(0, 1) = 2 + 1e-6;
    CHECK_FALSE(ngd::is_symmetric(m, 1e-12));
    CHECK(ngd::is_symmetric(m, 1e-3));
}

TEST_CASE("solve_linear solves a known system") {
    const Matrix a = test::matrix({{2, 1}, {1, 3}});
    const std::vector<double> x = ngd::solve_linear(a, {3, 5});
    CHECK(x[0] == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(1.4).epsilon(1e-14));
}

TEST_CASE("solve_linear pivots rows") {
    const Matrix a = test::matrix({{0, 1}, {1, 0}});
    const std::vector<double> x = ngd::solve_linear(a, {2, 9});
    CHECK(x[0] == 9.0);
    CHECK(x[1] == 2.0);
}

TEST_CASE("solve_linear flags singular systems") {
    CHECK_THROWS_AS(ngd::solve_linear(test::matrix({{1, 2}, {2, 4}}), {1, 2}),
                    ngd::SingularSystem);
}
