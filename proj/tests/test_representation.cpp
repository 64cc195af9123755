#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "psc/representation.hpp"
#include "psc/sampling.hpp"

using namespace psc;

namespace {
const Matrix kRotation = Matrix::from_rows({{0, 1}, {-1, 0}});

Representation build_rho6_assigned() {
    const FiniteGroup gamma = direct_product(build_cyclic(4), build_cyclic(4));
    const std::vector<int> gens{4, 1};  // (1,0), (0,1)
    const std::vector<Matrix> mats{direct_sum({kRotation, kRotation, Matrix::identity(2)}),
                                   direct_sum({Matrix::identity(2), kRotation, kRotation})};
    return from_generator_assignment(gamma, gens, mats, words_by_bfs(gamma, gens));
}
} // namespace

TEST_CASE("matrix closure") {
    {
        const Representation rep = from_matrix_generators({{Matrix::identity(2)}});
        CHECK(rep.group.order() == 1);
        CHECK(rep.dim == 2);
    }
    {
        const Representation rep = from_matrix_generators({{kRotation}});
        CHECK(rep.group.order() == 4);
        CHECK(rep.group.elem_order(rep.group.order() > 1 ? 1 : 0) > 1);
    }
    {
        const std::vector<Matrix> gens{direct_sum({kRotation, kRotation, Matrix::identity(2)}),
                                       direct_sum({Matrix::identity(2), kRotation, kRotation})};
        const Representation rep = from_matrix_generators(gens);
        CHECK(rep.group.order() == 16);
        // commuting generators of order 4: the element-order census matches
        // Z/4 x Z/4
        std::vector<int> orders;
        for (int g = 0; g < 16; ++g) orders.push_back(rep.group.elem_order(g));
        std::sort(orders.begin(), orders.end());
        const FiniteGroup z44 = direct_product(build_cyclic(4), build_cyclic(4));
        std::vector<int> expected;
        for (int g = 0; g < 16; ++g) expected.push_back(z44.elem_order(g));
        std::sort(expected.begin(), expected.end());
        CHECK(orders == expected);
    }
    // infinite order is caught by the ceiling
    CHECK_THROWS_AS(from_matrix_generators({{Matrix::from_rows({{1, 1}, {0, 1}})}}, 50),
                    GroupTooLargeError);
    Matrix singular(2, 2);
    CHECK_THROWS_AS(from_matrix_generators({{singular}}), InvalidArgumentError);
}

TEST_CASE("generator assignment") {
    const FiniteGroup z4 = build_cyclic(4);
    const std::vector<int> gens{1};
    const auto words = words_by_bfs(z4, gens);

    // trivial assignment is a homomorphism
    {
        const Representation rep =
            from_generator_assignment(z4, gens, {{Matrix::identity(2)}}, words);
        CHECK(rep.images[3] == Matrix::identity(2));
    }
    // an order-2 image of an order-4 generator is still a homomorphism
    {
        Matrix refl = Matrix::identity(2);
        refl(1, 1) = -1;
        const Representation rep = from_generator_assignment(z4, gens, {{refl}}, words);
        CHECK(rep.images[2] == Matrix::identity(2));
    }
    // a unipotent image is not: g^4 = e fails
    CHECK_THROWS_AS(
        from_generator_assignment(z4, gens, {{Matrix::from_rows({{1, 1}, {0, 1}})}}, words),
        NotAHomomorphismError);

    // the paper's 6-dimensional construction
    const Representation rho6 = build_rho6_assigned();
    CHECK(rho6.dim == 6);
    CHECK(rho6.images[4] == direct_sum({kRotation, kRotation, Matrix::identity(2)}));
    CHECK(trace(rho6.images[0]) == 6);
    CHECK(trace(rho6.images[4]) == 2);
}

TEST_CASE("word search requires generating sets") {
    const FiniteGroup z4 = build_cyclic(4);
    CHECK_THROWS_AS(words_by_bfs(z4, std::vector<int>{2}), InvalidArgumentError);
}

TEST_CASE("classification") {
    CHECK(classify(build_rho6_assigned()).family == RepFamily::SO);
    {
        const Representation rep = from_matrix_generators({{omega(2)}});
        CHECK(classify(rep).family == RepFamily::Sp);
    }
    {
        // lambda = -1 under the symplectic involution, finite of order 2
        const Matrix d = Matrix::from_rows({{1, 0}, {0, -1}});
        const Representation rep = from_matrix_generators({{d}});
        const RepSimilitudeProfile prof = similitude_profile(rep);
        REQUIRE(prof.symplectic_lambda.has_value());
        CHECK((*prof.symplectic_lambda)[0] == 1);
        CHECK((*prof.symplectic_lambda)[1] == -1);
        // classify prefers the orthogonal structure: d is in O_2 with det -1
        CHECK(classify(rep).family == RepFamily::O);
    }
    {
        // generic finite GL subgroup: the regular representation of Z/3 is
        // orthogonal (permutation matrices), so use a non-orthogonal
        // conjugate of it
        const FiniteGroup z3 = build_cyclic(3);
        Matrix p(3, 3);
        p(0, 2) = 1;
        p(1, 0) = 1;
        p(2, 1) = 1;
        const Matrix x = Matrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
        const Matrix gen = x * p * inverse(x);
        const Representation rep =
            from_generator_assignment(z3, {{1}}, {{gen}}, words_by_bfs(z3, {{1}}));
        CHECK(classify(rep).family == RepFamily::GL);
    }
}

TEST_CASE("conjugation") {
    const Representation rho6 = build_rho6_assigned();
    {
        const Representation same = conjugate_rep(rho6, Matrix::identity(6));
        for (int g = 0; g < 16; ++g) CHECK(same.images[g] == rho6.images[g]);
    }
    Matrix refl = Matrix::identity(6);
    refl(0, 0) = -1;
    const Representation prime = conjugate_rep(rho6, refl);
    for (int g = 0; g < 16; ++g) CHECK(trace(prime.images[g]) == trace(rho6.images[g]));
    // conjugating back restores the original
    const Representation back = conjugate_rep(prime, inverse(refl));
    for (int g = 0; g < 16; ++g) CHECK(back.images[g] == rho6.images[g]);

    Matrix singular(6, 6);
    CHECK_THROWS_AS(conjugate_rep(rho6, singular), SingularMatrixError);
}

TEST_CASE("direct sums of representations") {
    const FiniteGroup gamma = direct_product(build_cyclic(4), build_cyclic(4));
    const std::vector<int> gens{4, 1};
    const auto words = words_by_bfs(gamma, gens);
    const Matrix id2 = Matrix::identity(2);
    // the three 2-dimensional constituents (a,b) -> A^a, A^{a+b}, A^b
    const Representation pi1 = from_generator_assignment(gamma, gens, {{kRotation, id2}}, words);
    const Representation pi2 =
        from_generator_assignment(gamma, gens, {{kRotation, kRotation}}, words);
    const Representation pi3 = from_generator_assignment(gamma, gens, {{id2, kRotation}}, words);

    const std::vector<Representation> parts{pi1, pi2, pi3};
    const Representation sum = direct_sum_rep(parts);
    const Representation rho6 = build_rho6_assigned();
    CHECK(sum.dim == 6);
    for (int g = 0; g < 16; ++g) {
        CHECK(sum.images[g] == rho6.images[g]);
        CHECK(trace(sum.images[g]) ==
              trace(pi1.images[g]) + trace(pi2.images[g]) + trace(pi3.images[g]));
    }

    // mismatched groups are rejected
    const FiniteGroup z4 = build_cyclic(4);
    const Representation other =
        from_generator_assignment(z4, {{1}}, {{kRotation}}, words_by_bfs(z4, {{1}}));
    const std::vector<Representation> bad{pi1, other};
    CHECK_THROWS_AS(direct_sum_rep(bad), InvalidArgumentError);
}

TEST_CASE("similitude character is multiplicative") {
    // every classified family yields a homomorphism lambda
    for (const Representation& rep :
         {build_rho6_assigned(), from_matrix_generators({{omega(2)}}),
          from_matrix_generators({{Matrix::from_rows({{1, 0}, {0, -1}})}})}) {
        const RepSimilitudeProfile prof = similitude_profile(rep);
        if (prof.orthogonal_lambda) {
            const auto& l = *prof.orthogonal_lambda;
            for (int g = 0; g < rep.group.order(); ++g)
                for (int h = 0; h < rep.group.order(); ++h)
                    CHECK(l[rep.group.mul(g, h)] == l[g] * l[h]);
        }
        if (prof.symplectic_lambda) {
            const auto& l = *prof.symplectic_lambda;
            for (int g = 0; g < rep.group.order(); ++g)
                for (int h = 0; h < rep.group.order(); ++h)
                    CHECK(l[rep.group.mul(g, h)] == l[g] * l[h]);
        }
    }
}
