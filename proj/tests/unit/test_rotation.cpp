#include "landgen/error.hpp"
#include "landgen/rotation.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <random>

using namespace landgen;

TEST_CASE("givens matrix layout") {
    const Matrix g = givens_matrix(4, 1, 3, 0.3);
    CHECK(g(1, 1) == doctest::Approx(std::cos(0.3)));
    CHECK(g(3, 3) == doctest::Approx(std::cos(0.3)));
    CHECK(g(1, 3) == doctest::Approx(-std::sin(0.3)));
    CHECK(g(3, 1) == doctest::Approx(std::sin(0.3)));
    CHECK(g(0, 0) == 1.0);
    CHECK(g(2, 2) == 1.0);
    CHECK(g(0, 1) == 0.0);
    CHECK_THROWS_AS(givens_matrix(4, 3, 1, 0.3), InvalidArgument);
    CHECK_THROWS_AS(givens_matrix(4, 1, 4, 0.3), InvalidArgument);
    CHECK_THROWS_AS(givens_matrix(4, 2, 2, 0.3), InvalidArgument);
}

TEST_CASE("zero angles give the identity") {
    for (std::size_t d : {1u, 2u, 7u}) {
        const Matrix r = build_rotation(AngleMatrix(d));
        CHECK(r == Matrix::Identity(d, d));
    }
}

TEST_CASE("three-dimensional product matches high-precision reference") {
    // G(1,2; pi/6) G(1,3; pi/4) G(2,3; pi/3), reference values from mpmath at 40 digits.
    AngleMatrix psi(3);
    psi(0, 1) = std::numbers::pi / 6;
    psi(0, 2) = std::numbers::pi / 4;
    psi(1, 2) = std::numbers::pi / 3;
    const double expected[3][3] = {
        {0.61237243569579452455, -0.7803300858899106433, 0.12682648404432206111},
        {0.3535533905932737622, 0.12682648404432206111, -0.9267766952966368811},
        {0.7071067811865475244, 0.61237243569579452455, 0.3535533905932737622},
    };
    const Matrix r = build_rotation(psi);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::fabs(r(i, j) - expected[i][j]) <= 1e-15);
}

TEST_CASE("multiplication order is fixed and not commutative") {
    AngleMatrix psi(3);
    psi(0, 1) = 0.7;
    psi(1, 2) = -1.1;
    const Matrix r = build_rotation(psi);
    const Matrix forward = givens_matrix(3, 0, 1, 0.7) * givens_matrix(3, 1, 2, -1.1);
    const Matrix reverse = givens_matrix(3, 1, 2, -1.1) * givens_matrix(3, 0, 1, 0.7);
    CHECK((r - forward).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((r - reverse).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("column-update product equals explicit dense products") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::bernoulli_distribution nonzero(0.6);
    for (std::size_t d : {2u, 3u, 6u, 9u}) {
        for (int rep = 0; rep < 10; ++rep) {
            AngleMatrix psi(d);
            for (std::size_t u = 0; u < d; ++u)
                for (std::size_t v = u + 1; v < d; ++v)
                    if (nonzero(gen)) psi(u, v) = angle(gen);
            const Matrix r = build_rotation(psi);
            const auto ref = oracle::rotation(psi);
            double worst = 0.0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) worst = std::max(worst, std::fabs(r(i, j) - ref[i][j]));
            CHECK(worst <= 1e-13);
        }
    }
}

TEST_CASE("orthogonality residual and determinant") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (std::size_t d : {2u, 5u, 10u, 50u}) {
        AngleMatrix psi(d);
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = u + 1; v < d; ++v) psi(u, v) = angle(gen);
        const Matrix r = build_rotation(psi);
        CHECK(orthogonality_residual(r) <= 1e-10);
        CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-9));
    }
    Matrix skewed = Matrix::Identity(3, 3);
    skewed(0, 1) = 1e-3;
    CHECK(orthogonality_residual(skewed) == doctest::Approx(1e-3).epsilon(1e-6));
}
