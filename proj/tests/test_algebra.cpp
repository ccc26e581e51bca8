#include <catch_amalgamated.hpp>

#include "strata/algebra.hpp"
#include "strata/rng.hpp"
#include "strata/specfile.hpp"

#include "support/fixtures.hpp"

using namespace strata;

TEST_CASE("heisenberg loads with the descending basis convention") {
    const auto alg = fixtures::heisenberg();
    CHECK(alg.dim == 3);
    CHECK(alg.depth == 2);
    CHECK(alg.weights == std::vector<int>{2, 1, 1});
    CHECK(alg.labels == std::vector<std::string>{"Z", "X", "Y"});
    // user coordinates (x, y, z) round-trip through the permutation
    const RatVec user{Rational(3), Rational(5), Rational(7)};
    CHECK(alg.internal_to_user(alg.user_to_internal(user)) == user);
    CHECK(alg.user_to_internal(user) == RatVec{Rational(7), Rational(3), Rational(5)});
}

TEST_CASE("abelian algebra is valid with depth 1") {
    const auto alg = fixtures::abelian(4);
    CHECK(alg.dim == 4);
    CHECK(alg.depth == 1);
    CHECK(homogeneous_dimension(alg) == 4);
}

TEST_CASE("graded violation carries the witness triple") {
    try {
        load_algebra(R"(name broken
generator X 1
generator Y 1
generator Z 3
bracket X Y = 1 Z
)");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.identity == Identity::graded);
        CHECK(e.witness[0] == "X");
        CHECK(e.witness[1] == "Y");
        CHECK(e.witness[2] == "Z");
        CHECK(e.residual == "1");
    }
}

TEST_CASE("antisymmetry violation is caught when both orientations are given") {
    try {
        load_algebra(R"(name broken
generator X 1
generator Y 1
generator Z 2
bracket X Y = 1 Z
bracket Y X = 1 Z
)");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.identity == Identity::antisymmetry);
    }
}

TEST_CASE("jacobi violation is caught") {
    // [X,[Y,Z]] = [X,T] = U while the two other cyclic terms vanish
    try {
        load_algebra(R"(name nojacobi
generator X 1
generator Y 1
generator Z 2
generator T 3
generator U 4
bracket X Y = 1 Z
bracket X Z = 1 T
bracket Y Z = 1 T
bracket X T = 1 U
)");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.identity == Identity::jacobi);
    }
}

TEST_CASE("perturbing one orientation of a structure constant is rejected") {
    const auto alg = fixtures::engel();
    auto table = alg.table;
    // damage [X, Y] but not [Y, X]
    const int i = alg.label_index("X");
    const int j = alg.label_index("Y");
    table[i][j][0].second += Rational(1, 7);
    CHECK_THROWS_AS(validate_structure<Rational>(alg.dim, alg.weights, alg.labels, table),
                    ValidationError);
}

TEST_CASE("bracket matches the structure constants") {
    const auto h3 = fixtures::heisenberg();
    const auto x = fixtures::primal_axis(h3, "X");
    const auto y = fixtures::primal_axis(h3, "Y");
    CHECK(bracket(h3, x, y).c == fixtures::primal_axis(h3, "Z").c);
    CHECK(is_zero(bracket(h3, x, x).c));

    const auto engel = fixtures::engel();
    const auto ex = fixtures::primal_axis(engel, "X");
    const auto ez = fixtures::primal_axis(engel, "Z");
    CHECK(bracket(engel, ex, ez).c == fixtures::primal_axis(engel, "T").c);

    SeededRng rng(5);
    const Vec a = primal(rng.rational_vector(engel.dim, 8));
    CHECK(is_zero(bracket(engel, a, a).c));

    CHECK_THROWS_AS(bracket(h3, primal(RatVec{Rational(1)}), x), DimensionMismatch);
    CHECK_THROWS_AS(bracket(h3, fixtures::dual_axis(h3, "X"), x), FrameMismatch);
}

TEST_CASE("dilation scales by weight and is an automorphism") {
    const auto h3 = fixtures::heisenberg();
    const auto z = fixtures::primal_axis(h3, "Z");
    CHECK(dilate(h3, Rational(2), z).c == fixtures::primal_axis(h3, "Z", Rational(4)).c);

    SeededRng rng(17);
    for (const auto& alg : {fixtures::heisenberg(), fixtures::engel()}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Vec a = primal(rng.rational_vector(alg.dim, 6));
            const Vec b = primal(rng.rational_vector(alg.dim, 6));
            Rational lambda = rng.rational(6);
            if (lambda <= 0) lambda = Rational(1) - lambda;
            CHECK(dilate(alg, Rational(1), a).c == a.c);
            // group law of dilations
            const Rational mu = Rational(3, 2);
            CHECK(dilate(alg, lambda, dilate(alg, mu, a)).c == dilate(alg, lambda * mu, a).c);
            // automorphism property
            CHECK(bracket(alg, dilate(alg, lambda, a), dilate(alg, lambda, b)).c ==
                  dilate(alg, lambda, bracket(alg, a, b)).c);
        }
    }
    CHECK_THROWS_AS(dilate(h3, Rational(0), z), NonpositiveScale);
    CHECK_THROWS_AS(dilate(h3, Rational(-2), z), NonpositiveScale);
}

TEST_CASE("ad is nilpotent of index at most the depth") {
    SeededRng rng(23);
    for (const auto& alg : {fixtures::heisenberg(), fixtures::engel(), fixtures::h3_plus_r()}) {
        for (int b = 0; b < alg.dim; ++b) {
            RatVec e(alg.dim, Rational(0));
            e[b] = 1;
            RatMatrix m = alg.ad(e);
            RatMatrix pwr = m;
            for (int k = 1; k <= alg.depth; ++k) pwr = pwr * m;
            CHECK(pwr == RatMatrix(alg.dim, alg.dim)); // ad^{r+1} = 0
        }
        const RatMatrix m = alg.ad(rng.rational_vector(alg.dim, 5));
        RatMatrix pwr = m;
        for (int k = 1; k <= alg.depth; ++k) pwr = pwr * m;
        CHECK(pwr == RatMatrix(alg.dim, alg.dim));
    }
}

TEST_CASE("homogeneous dimension") {
    CHECK(homogeneous_dimension(fixtures::heisenberg()) == 4);
    CHECK(homogeneous_dimension(fixtures::engel()) == 7);
    CHECK(homogeneous_dimension(fixtures::abelian(7)) == 7);
    CHECK(homogeneous_dimension(fixtures::h3_plus_r()) == 6);
}
