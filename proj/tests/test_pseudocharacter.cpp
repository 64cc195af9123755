#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psc/pseudocharacter.hpp"
#include "psc/sampling.hpp"

using namespace psc;

namespace {

const Matrix kRotation = Matrix::from_rows({{0, 1}, {-1, 0}});

VerifyOptions fast_options() {
    VerifyOptions opts;
    opts.budget = 100'000;
    return opts;
}

Representation rho6() {
    const FiniteGroup gamma = direct_product(build_cyclic(4), build_cyclic(4));
    const std::vector<int> gens{4, 1};
    const std::vector<Matrix> mats{direct_sum({kRotation, kRotation, Matrix::identity(2)}),
                                   direct_sum({Matrix::identity(2), kRotation, kRotation})};
    return from_generator_assignment(gamma, gens, mats, words_by_bfs(gamma, gens));
}

Representation trivial_rep(const FiniteGroup& grp, int dim) {
    Representation rep{grp, dim, std::vector<Matrix>(grp.order(), Matrix::identity(dim))};
    return rep;
}

// (T, l) of the order-2 scaled orthogonal model with lambda = -1; the model
// matrix is complex but its trace and similitude values are rational, so the
// pair is a rational GO_2 pseudocharacter with a nontrivial character.
PseudocharData go2_data() {
    PseudocharData d{build_cyclic(2), 2, {Rational(2), Rational(0)},
                     std::vector<Rational>{Rational(1), Rational(-1)}, std::nullopt};
    return d;
}

Representation so3_rotation() {
    Matrix p(3, 3);
    p(0, 2) = 1;
    p(1, 0) = 1;
    p(2, 1) = 1;
    return from_matrix_generators({{p}});
}

Representation o3_extension() {
    Matrix p(3, 3);
    p(0, 2) = 1;
    p(1, 0) = 1;
    p(2, 1) = 1;
    Matrix refl = Matrix::identity(3);
    refl(0, 0) = -1;
    return from_matrix_generators({{p, refl}});
}

} // namespace

TEST_CASE("gl verification") {
    // a multiplicative character is a 1-dimensional pseudocharacter
    {
        PseudocharData d{build_cyclic(4), 1, std::vector<Rational>(4, Rational(1)), std::nullopt,
                         std::nullopt};
        CHECK(verify_gl(d).pass());
    }
    // traces of a representation pass at the right dimension and fail the
    // dimension axiom when the declared n is wrong
    {
        const Representation rep = rho6();
        PseudocharData d = trace_function(rep);
        d.l.reset();
        CHECK(verify_gl(d, fast_options()).pass());

        PseudocharData wrong = d;
        wrong.dim = 5;
        const VerificationReport report = verify_gl(wrong, fast_options());
        CHECK(!report.pass());
        bool dim_axiom_failed = false;
        for (const auto& v : report.violations) dim_axiom_failed |= v.axiom == "T(1)=n";
        CHECK(dim_axiom_failed);
    }
    // the relation family detects a dimension mismatch even when T(1) lies:
    // a faithful 2-dimensional trace declared as 1-dimensional
    {
        const Representation rep = from_matrix_generators({{kRotation}});
        PseudocharData d = trace_function(rep);
        d.l.reset();
        d.dim = 1;
        d.T[rep.group.identity()] = 1;  // forge the dimension axiom
        const VerificationReport report = verify_gl(d, fast_options());
        CHECK(!report.pass());
        bool relation_failed = false;
        for (const auto& v : report.violations) relation_failed |= v.axiom == "relation gl";
        CHECK(relation_failed);
    }
}

TEST_CASE("go verification") {
    // the scaled-model data with nontrivial similitude character
    CHECK(verify_go(go2_data(), fast_options()).pass());

    // the similitude character is required
    {
        PseudocharData d = go2_data();
        d.l.reset();
        CHECK_THROWS_AS(verify_go(d, fast_options()), MissingSimilitudeError);
    }
    // a non-multiplicative l is rejected before any axiom runs
    {
        PseudocharData d{build_cyclic(4), 2,
                         std::vector<Rational>{Rational(2), Rational(0), Rational(-2), Rational(0)},
                         std::vector<Rational>{Rational(1), Rational(2), Rational(1), Rational(1)},
                         std::nullopt};
        CHECK_THROWS_AS(verify_go(d, fast_options()), MalformedSimilitudeError);
    }
    // rho_6 is an O_6 pseudocharacter
    {
        PseudocharData d = trace_function(rho6());
        const VerificationReport report = verify_o(d, fast_options());
        CHECK(report.pass());
    }
    // hand-authored data violating the inversion axiom
    {
        PseudocharData d{build_cyclic(3), 2,
                         std::vector<Rational>{Rational(2), Rational(1), Rational(0)},
                         std::vector<Rational>(3, Rational(1)), std::nullopt};
        const VerificationReport report = verify_go(d, fast_options());
        CHECK(!report.pass());
        bool inversion_failed = false;
        for (const auto& v : report.violations) inversion_failed |= v.axiom == "inversion";
        CHECK(inversion_failed);
    }
}

TEST_CASE("gsp verification") {
    // the symplectic subgroup generated by the standard form
    {
        const Representation rep = from_matrix_generators({{omega(2)}});
        CHECK(classify(rep).family == RepFamily::Sp);
        PseudocharData d = trace_function(rep);
        const VerificationReport report = verify_gsp(d, fast_options());
        CHECK(report.pass());
        bool banner = false;
        for (const auto& n : report.notes) banner |= n == "symplectic relation family not checked";
        CHECK(banner);
    }
    // finite symplectic similitude group with lambda values (-1)^k
    {
        const Matrix d2 = Matrix::from_rows({{1, 0}, {0, -1}});
        const Representation rep = from_matrix_generators({{d2}});
        const RepSimilitudeProfile prof = similitude_profile(rep);
        REQUIRE(prof.symplectic_lambda.has_value());
        PseudocharData d{rep.group, 2, {Rational(2), Rational(0)}, *prof.symplectic_lambda,
                         std::nullopt};
        CHECK(verify_gsp(d, fast_options()).pass());
    }
    // centrality violations are detected (needs a nonabelian group)
    {
        Matrix swap01(3, 3);
        swap01(0, 1) = 1;
        swap01(1, 0) = 1;
        swap01(2, 2) = 1;
        Matrix cyc(3, 3);
        cyc(0, 2) = 1;
        cyc(1, 0) = 1;
        cyc(2, 1) = 1;
        const Representation s3 = from_matrix_generators({{swap01, cyc}});
        REQUIRE(s3.group.order() == 6);
        PseudocharData d{s3.group, 2, {}, std::vector<Rational>(6, Rational(1)), std::nullopt};
        d.T.assign(6, Rational(0));
        d.T[s3.group.identity()] = 2;
        // choose distinct values on a conjugate pair gh vs hg
        int g = -1, h = -1;
        for (int a = 0; a < 6 && g < 0; ++a)
            for (int b = 0; b < 6 && g < 0; ++b)
                if (s3.group.mul(a, b) != s3.group.mul(b, a)) {
                    g = a;
                    h = b;
                }
        REQUIRE(g >= 0);
        d.T[s3.group.mul(g, h)] = 5;
        d.T[s3.group.mul(h, g)] = 7;
        const VerificationReport report = verify_gsp(d, fast_options());
        CHECK(!report.pass());
        bool central_failed = false;
        for (const auto& v : report.violations) central_failed |= v.axiom == "centrality";
        CHECK(central_failed);
    }
    // odd dimension is rejected
    {
        PseudocharData d{build_cyclic(2), 3, {Rational(3), Rational(1)},
                         std::vector<Rational>(2, Rational(1)), std::nullopt};
        CHECK_THROWS_AS(verify_gsp(d, fast_options()), InvalidArgumentError);
    }
}

TEST_CASE("odd special orthogonal verification") {
    // an exact SO_3 fixture built from even permutation matrices
    {
        const Representation rep = so3_rotation();
        CHECK(rep.group.order() == 3);
        CHECK(verify_so_odd(trace_function(rep), fast_options()).pass());
    }
    // the O_3 extension fails exactly at the determinant axiom
    {
        const Representation rep = o3_extension();
        const VerificationReport report = verify_so_odd(trace_function(rep), fast_options());
        CHECK(!report.pass());
        for (const auto& v : report.violations) CHECK(v.axiom == "det(T)=1");
        bool det_failed = false;
        for (const auto& v : report.violations) det_failed |= v.axiom == "det(T)=1";
        CHECK(det_failed);
    }
    // the trivial rep of dimension 3 passes
    CHECK(verify_so_odd(trace_function(trivial_rep(build_cyclic(2), 3)), fast_options()).pass());
    // even dimension is rejected
    {
        PseudocharData d = trace_function(rho6());
        CHECK_THROWS_AS(verify_so_odd(d, fast_options()), InvalidArgumentError);
    }
}

TEST_CASE("even special orthogonal verification") {
    const Representation rep = rho6();
    // with the full P table: passes, and the witness entry is 16
    {
        PseudocharData d = trace_function(rep);
        d.P = pl_table(rep);
        CHECK(d.P->at({1, 1, 4}) == 16);
        CHECK(verify_so_even(d, &rep, fast_options()).pass());
    }
    // without P: passes with a note
    {
        PseudocharData d = trace_function(rep);
        const VerificationReport report = verify_so_even(d, &rep, fast_options());
        CHECK(report.pass());
        bool note = false;
        for (const auto& n : report.notes) note |= n == "P not supplied";
        CHECK(note);
    }
    // an all-zero P contradicts the model
    {
        PseudocharData d = trace_function(rep);
        std::map<std::vector<int>, Rational> zeros;
        for (const auto& [tuple, value] : pl_table(rep)) zeros[tuple] = 0;
        d.P = std::move(zeros);
        const VerificationReport report = verify_so_even(d, &rep, fast_options());
        CHECK(!report.pass());
        bool model_failed = false;
        for (const auto& v : report.violations) model_failed |= v.axiom == "P model consistency";
        CHECK(model_failed);
    }
    // asymmetric P entries are inconsistent even without a model
    {
        PseudocharData d = trace_function(rep);
        std::map<std::vector<int>, Rational> p;
        p[{1, 1, 4}] = 16;
        p[{1, 4, 1}] = -16;
        d.P = std::move(p);
        const VerificationReport report = verify_so_even(d, nullptr, fast_options());
        CHECK(!report.pass());
        bool sym_failed = false;
        for (const auto& v : report.violations) sym_failed |= v.axiom == "P symmetry";
        CHECK(sym_failed);
    }
    // wrong arity is rejected
    {
        PseudocharData d = trace_function(rep);
        std::map<std::vector<int>, Rational> p;
        p[{1, 1}] = 0;
        d.P = std::move(p);
        CHECK_THROWS_AS(verify_so_even(d, &rep, fast_options()), InvalidArgumentError);
    }
    // a 2-dimensional special orthogonal fixture, P of arity 1
    {
        const Representation small = from_matrix_generators({{kRotation}});
        PseudocharData d = trace_function(small);
        d.P = pl_table(small);
        CHECK(d.P->at({1}) == 2);  // pf(A - A^t)
        CHECK(verify_so_even(d, &small, fast_options()).pass());
    }
}

TEST_CASE("perturbation discrimination") {
    // a +1 perturbation at a well-chosen nonidentity element flips every
    // fixture's verdict
    {
        PseudocharData d{build_cyclic(4), 1, std::vector<Rational>(4, Rational(1)), std::nullopt,
                         std::nullopt};
        d.T[2] += 1;
        CHECK(!verify_gl(d, fast_options()).pass());
    }
    {
        const Representation small = from_matrix_generators({{kRotation}});
        PseudocharData d = trace_function(small);
        d.P = pl_table(small);
        d.T[1] += 1;
        CHECK(!verify_so_even(d, &small, fast_options()).pass());
    }
    {
        PseudocharData d = trace_function(rho6());
        d.T[1] += 1;  // (0,1): inversion axiom sees T((0,1)) != T((0,3))
        CHECK(!verify_o(d, fast_options()).pass());
    }
    {
        PseudocharData d = go2_data();
        d.T[1] += 1;
        CHECK(!verify_go(d, fast_options()).pass());
    }
    {
        const Representation sp = from_matrix_generators({{omega(2)}});
        PseudocharData d = trace_function(sp);
        d.T[1] += 1;
        CHECK(!verify_gsp(d, fast_options()).pass());
    }
    {
        PseudocharData d = trace_function(so3_rotation());
        d.T[1] += 1;
        CHECK(!verify_so_odd(d, fast_options()).pass());
    }
}

TEST_CASE("kernel of T") {
    // the regular representation separates elements
    {
        const FiniteGroup z4 = build_cyclic(4);
        Matrix shift(4, 4);
        for (int i = 0; i < 4; ++i) shift((i + 1) % 4, i) = 1;
        const Representation reg =
            from_generator_assignment(z4, {{1}}, {{shift}}, words_by_bfs(z4, {{1}}));
        const PseudocharData d = trace_function(reg);
        CHECK(kernel_of_T(d) == std::vector<int>{0});
    }
    // the trivial representation has full kernel
    {
        const PseudocharData d = trace_function(trivial_rep(build_cyclic(4), 3));
        CHECK(kernel_of_T(d) == std::vector<int>{0, 1, 2, 3});
    }
    // rho_6 is faithful
    {
        const PseudocharData d = trace_function(rho6());
        CHECK(kernel_of_T(d) == std::vector<int>{0});
    }
    // kernel of a non-faithful representation equals the representation
    // kernel, and is a subgroup
    {
        const FiniteGroup z4 = build_cyclic(4);
        const Matrix d2 = Matrix::from_rows({{1, 0}, {0, -1}});
        const Representation pulled =
            from_generator_assignment(z4, {{1}}, {{d2}}, words_by_bfs(z4, {{1}}));
        const PseudocharData d = trace_function(pulled);
        const std::vector<int> kernel = kernel_of_T(d);
        CHECK(kernel == std::vector<int>{0, 2});
        CHECK(is_subgroup(z4, kernel));
        std::vector<int> rep_kernel;
        for (int g = 0; g < 4; ++g)
            if (pulled.images[g] == Matrix::identity(2)) rep_kernel.push_back(g);
        CHECK(kernel == rep_kernel);
    }
}

TEST_CASE("relation evaluation on group data") {
    // the 1-dimensional relation annihilates a multiplicative character
    {
        PseudocharData d{build_cyclic(4), 1, std::vector<Rational>(4, Rational(1)), std::nullopt,
                         std::nullopt};
        const RelationPolynomial gl1 = gl_relation(1);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) CHECK(eval_relation(gl1, d, std::vector<int>{a, b}) == 0);
    }
    // and detects a 2-dimensional trace
    {
        const Representation small = from_matrix_generators({{kRotation}});
        PseudocharData d = trace_function(small);
        d.l.reset();
        d.dim = 1;
        const RelationPolynomial gl1 = gl_relation(1);
        bool nonzero = false;
        for (int a = 0; a < 4 && !nonzero; ++a)
            for (int b = 0; b < 4 && !nonzero; ++b)
                nonzero = eval_relation(gl1, d, std::vector<int>{a, b}) != 0;
        CHECK(nonzero);
    }
    // the GO relations vanish on similitude data, every admissible j
    {
        const PseudocharData d = go2_data();
        for (int j = 0; 2 * j <= 3; ++j) {
            const RelationPolynomial g = g_relation(2, j);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c)
                        CHECK(eval_relation(g, d, std::vector<int>{a, b, c}) == 0);
        }
    }
    // l is demanded exactly when a term carries it
    {
        PseudocharData d = go2_data();
        d.l.reset();
        const RelationPolynomial g = g_relation(2, 1);
        bool throws = false;
        for (int a = 0; a < 2 && !throws; ++a)
            for (int b = 0; b < 2 && !throws; ++b)
                for (int c = 0; c < 2 && !throws; ++c) {
                    try {
                        (void)eval_relation(g, d, std::vector<int>{a, b, c});
                    } catch (const MissingSimilitudeError&) {
                        throws = true;
                    }
                }
        CHECK(throws);
    }
}

TEST_CASE("report text is stable and informative") {
    PseudocharData d = go2_data();
    const VerificationReport r1 = verify_go(d, fast_options());
    const VerificationReport r2 = verify_go(d, fast_options());
    CHECK(r1.to_text() == r2.to_text());
    CHECK(r1.to_text().find("verdict: PASS") == 0);
}
