#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psc/pfaffian.hpp"
#include "psc/sampling.hpp"

using namespace psc;

namespace {
const Matrix kRotation = Matrix::from_rows({{0, 1}, {-1, 0}});

Matrix random_block_diagonal(int n, SeededRng& rng) {
    std::vector<Matrix> blocks;
    for (int i = 0; i < n; ++i) blocks.push_back(random_matrix(2, 2, rng));
    return direct_sum(std::span<const Matrix>(blocks));
}
} // namespace

TEST_CASE("pfaffian base cases") {
    Matrix w(2, 2);
    w(0, 1) = make_rational(5, 3);
    w(1, 0) = make_rational(-5, 3);
    CHECK(pfaffian(w) == make_rational(5, 3));

    CHECK(pf_tilde(kRotation) == 2);
    CHECK(pf_tilde(Matrix::identity(6)) == 0);

    // 4x4 sign convention: pf = w01 w23 - w02 w13 + w03 w12
    Matrix v(4, 4);
    int val = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            v(i, j) = val;
            v(j, i) = -val;
            ++val;
        }
    // entries: w01=1 w02=2 w03=3 w12=4 w13=5 w23=6
    CHECK(pfaffian(v) == 1 * 6 - 2 * 5 + 3 * 4);

    CHECK_THROWS_AS(pfaffian(Matrix::identity(3)), InvalidArgumentError);
    CHECK_THROWS_AS(pfaffian(Matrix::identity(2)), InvalidArgumentError);
    CHECK_THROWS_AS(pf_tilde(Matrix::identity(3)), InvalidArgumentError);
    Matrix sym(2, 2);
    sym(0, 1) = 1;
    sym(1, 0) = 1;
    CHECK(pf_tilde(sym) == 0);
}

TEST_CASE("pfaffian squares to the determinant") {
    SeededRng rng(3);
    for (int n : {2, 4, 6, 8}) {
        for (int i = 0; i < 10; ++i) {
            const Matrix w = random_antisymmetric(n, rng);
            const Rational p = pfaffian(w);
            CHECK(p * p == det(w));
        }
    }
}

TEST_CASE("full polarization identities") {
    SeededRng rng(17);
    // pl(C,...,C) = n! pf_tilde(C)
    for (int n : {2, 3, 4}) {
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        for (int i = 0; i < 5; ++i) {
            const Matrix c = random_matrix(2 * n, 2 * n, rng);
            std::vector<Matrix> args(n, c);
            CHECK(linearized_pfaffian(args) == Rational(fact) * pf_tilde(c));
        }
    }
    // symmetry and multilinearity on random 6x6 triples
    for (int i = 0; i < 10; ++i) {
        const Matrix x = random_matrix(6, 6, rng);
        const Matrix y = random_matrix(6, 6, rng);
        const Matrix z = random_matrix(6, 6, rng);
        const Rational base = linearized_pfaffian({x, y, z});
        CHECK(linearized_pfaffian({y, x, z}) == base);
        CHECK(linearized_pfaffian({z, y, x}) == base);
        const Rational a = make_rational(2, 3), b = make_rational(-1, 2);
        const Matrix mix = a * y + b * z;
        CHECK(linearized_pfaffian({x, mix, z}) ==
              a * linearized_pfaffian({x, y, z}) + b * linearized_pfaffian({x, z, z}));
    }
    CHECK_THROWS_AS(linearized_pfaffian({Matrix::identity(4)}), InvalidArgumentError);
    CHECK_THROWS_AS(linearized_pfaffian({Matrix::identity(4), Matrix::identity(6)}),
                    InvalidArgumentError);
}

TEST_CASE("sign flip under a reflection conjugation") {
    SeededRng seeds(23);
    for (int i = 0; i < 10; ++i) {
        std::vector<Matrix> tuple;
        for (int k = 0; k < 3; ++k)
            tuple.push_back(sample_orthogonal(6, true, 100 + 10 * i + k));
        Matrix refl = Matrix::identity(6);
        refl(0, 0) = -1;
        std::vector<Matrix> conj;
        for (const auto& c : tuple) conj.push_back(refl * c * refl);
        CHECK(linearized_pfaffian(conj) == -linearized_pfaffian(tuple));
    }
}

TEST_CASE("block oracle matches the polarization") {
    // all-identity input vanishes
    std::vector<Matrix> ids(3, Matrix::identity(6));
    CHECK(pl_block_oracle(ids) == 0);
    CHECK(linearized_pfaffian(ids) == 0);

    // the 6-dimensional counterexample witness value
    const Matrix g1 = direct_sum({kRotation, kRotation, Matrix::identity(2)});
    const Matrix g2 = direct_sum({Matrix::identity(2), kRotation, kRotation});
    CHECK(pl_block_oracle({g1, g2, g2}) == 16);
    CHECK(linearized_pfaffian({g1, g2, g2}) == 16);

    // cross-implementation agreement on random 2x2-block inputs
    SeededRng rng(31);
    for (int i = 0; i < 50; ++i) {
        std::vector<Matrix> cs;
        for (int k = 0; k < 3; ++k) cs.push_back(random_block_diagonal(3, rng));
        CHECK(pl_block_oracle(cs) == linearized_pfaffian(cs));
    }

    CHECK_THROWS_AS(pl_block_oracle({random_matrix(6, 6, rng), random_matrix(6, 6, rng),
                                     random_matrix(6, 6, rng)}),
                    InvalidArgumentError);
}
