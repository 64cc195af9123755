#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psc/matrix.hpp"
#include "psc/sampling.hpp"

using namespace psc;

namespace {
const Matrix kRotation = Matrix::from_rows({{0, 1}, {-1, 0}});
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-4/2") == make_rational(-2));
    CHECK(to_string(make_rational(-3, 6)) == "-1/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("arithmetic basics") {
    CHECK(trace(Matrix::identity(5)) == 5);
    CHECK(kRotation * transpose(kRotation) == Matrix::identity(2));

    const Matrix rho6_gen = direct_sum({kRotation, kRotation, Matrix::identity(2)});
    CHECK(rho6_gen.rows() == 6);
    CHECK(trace(rho6_gen) == 2);
    CHECK(rho6_gen(0, 1) == 1);
    CHECK(rho6_gen(3, 2) == -1);
    CHECK(rho6_gen(4, 4) == 1);

    CHECK_THROWS_AS(Matrix::identity(2) + Matrix::identity(3), DimensionError);
    CHECK_THROWS_AS(Matrix::identity(2) * Matrix(3, 3), DimensionError);
    CHECK_THROWS_AS(trace(Matrix(2, 3)), DimensionError);
}

TEST_CASE("determinant and inverse are exact") {
    CHECK(det(Matrix::identity(5)) == 1);
    CHECK(det(kRotation) == 1);

    // both generator images of the rho_6 construction and their product
    const Matrix g1 = direct_sum({kRotation, kRotation, Matrix::identity(2)});
    const Matrix g2 = direct_sum({Matrix::identity(2), kRotation, kRotation});
    CHECK(det(g1 * g2) == 1);

    SeededRng rng(11);
    for (int i = 0; i < 25; ++i) {
        const Matrix m = random_nonsingular_matrix(4, rng);
        CHECK(m * inverse(m) == Matrix::identity(4));
        CHECK(det(inverse(m)) * det(m) == 1);
    }
    Matrix singular(2, 2);
    singular(0, 0) = 1;
    singular(1, 0) = 2;
    CHECK(det(singular) == 0);
    CHECK_THROWS_AS(inverse(singular), SingularMatrixError);
    CHECK_THROWS_AS(det(Matrix(2, 3)), DimensionError);
}

TEST_CASE("newton recurrence recovers elementary symmetric functions") {
    {
        const std::vector<Rational> p{Rational(5)};
        const auto e = charpoly_coeffs_from_traces(p);
        REQUIRE(e.size() == 1);
        CHECK(e[0] == 5);
    }
    {
        // traces of the order-4 rotation and its square
        const std::vector<Rational> p{Rational(0), Rational(-2)};
        const auto e = charpoly_coeffs_from_traces(p);
        REQUIRE(e.size() == 2);
        CHECK(e[0] == 0);
        CHECK(e[1] == 1);
        CHECK(e[1] == det(kRotation));
    }
    CHECK_THROWS_AS(charpoly_coeffs_from_traces(std::vector<Rational>{}), InvalidArgumentError);

    // cross-check against the direct determinant
    SeededRng rng(7);
    for (int size = 2; size <= 6; ++size) {
        for (int i = 0; i < (size == 3 ? 100 : 20); ++i) {
            const Matrix m = random_matrix(size, size, rng);
            std::vector<Rational> powers;
            Matrix acc = m;
            for (int k = 1; k <= size; ++k) {
                powers.push_back(trace(acc));
                acc = acc * m;
            }
            CHECK(determinant_from_power_traces(powers) == det(m));
        }
    }
}

TEST_CASE("similitude classification") {
    {
        const SimilitudeClass c = classify_similitude(Matrix::identity(4));
        REQUIRE(c.orthogonal_lambda.has_value());
        CHECK(*c.orthogonal_lambda == 1);
        CHECK(c.special_orthogonal);
    }
    {
        // scaled orthogonal sample: lambda = c^2
        const Matrix q = sample_orthogonal(3, true, 42);
        CHECK(q * transpose(q) == Matrix::identity(3));
        const SimilitudeClass c = classify_similitude(q * Rational(2));
        REQUIRE(c.orthogonal_lambda.has_value());
        CHECK(*c.orthogonal_lambda == 4);
        CHECK(c.kinds() == std::vector<MatrixKind>{MatrixKind::general_orthogonal});
    }
    {
        const SimilitudeClass c = classify_similitude(omega(4));
        REQUIRE(c.symplectic_lambda.has_value());
        CHECK(*c.symplectic_lambda == 1);
        // omega is also special orthogonal
        REQUIRE(c.orthogonal_lambda.has_value());
        CHECK(*c.orthogonal_lambda == 1);
        CHECK(c.special_orthogonal);
    }
    {
        // every 2x2 matrix is a symplectic similitude with lambda = det
        const Matrix m = Matrix::from_rows({{1, 2}, {0, 1}});
        const SimilitudeClass c = classify_similitude(m);
        REQUIRE(c.symplectic_lambda.has_value());
        CHECK(*c.symplectic_lambda == 1);
        CHECK(!c.orthogonal_lambda.has_value());
    }
    {
        // generic odd-dimensional matrix is only GL
        const Matrix m = Matrix::from_rows({{1, 2, 0}, {0, 1, 0}, {1, 0, 3}});
        const SimilitudeClass c = classify_similitude(m);
        CHECK(c.kinds() == std::vector<MatrixKind>{MatrixKind::general_linear});
    }
    Matrix singular(2, 2);
    CHECK_THROWS_AS(classify_similitude(singular), InvalidArgumentError);
}

TEST_CASE("orthogonal samplers") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Matrix q = sample_orthogonal(4, true, seed);
        CHECK(q * transpose(q) == Matrix::identity(4));
        CHECK(det(q) == 1);

        const Matrix o = sample_orthogonal(3, false, seed);
        CHECK(o * transpose(o) == Matrix::identity(3));

        const Matrix sp = sample_signed_permutation(5, true, seed);
        CHECK(sp * transpose(sp) == Matrix::identity(5));
        CHECK(det(sp) == 1);
    }
    // determinism per seed
    CHECK(sample_orthogonal(4, false, 9) == sample_orthogonal(4, false, 9));
    CHECK_THROWS_AS(sample_orthogonal(0, true, 1), InvalidArgumentError);
}
