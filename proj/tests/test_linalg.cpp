#include <catch_amalgamated.hpp>

#include "strata/linalg.hpp"
#include "strata/rng.hpp"

using namespace strata;

namespace {

RatMatrix random_matrix(SeededRng& rng, int rows, int cols, std::int64_t height) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational(height);
    return m;
}

} // namespace

TEST_CASE("rank of known matrices") {
    RatMatrix m(3, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(2, 2) = Rational(1, 3);
    CHECK(rank(m) == 2);
    CHECK(rank(RatMatrix(4, 4)) == 0);
    CHECK(rank(RatMatrix::identity(5)) == 5);
}

TEST_CASE("kernel solves M x = 0 exactly") {
    SeededRng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(5));
        const int cols = 1 + static_cast<int>(rng.below(6));
        const RatMatrix m = random_matrix(rng, rows, cols, 6);
        const auto kernel = kernel_basis(m);
        CHECK(static_cast<int>(kernel.size()) == cols - rank(m));
        for (const auto& v : kernel) {
            CHECK(!is_zero(v));
            CHECK(is_zero(m.apply(v)));
        }
    }
}

TEST_CASE("solve finds a preimage and detects inconsistency") {
    SeededRng rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(5));
        const int cols = 1 + static_cast<int>(rng.below(5));
        const RatMatrix m = random_matrix(rng, rows, cols, 6);
        const RatVec x = rng.rational_vector(cols, 6);
        const RatVec b = m.apply(x);
        const auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
    // x + y = 0 and x + y = 1 cannot both hold
    RatMatrix m(2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = 1;
    CHECK_FALSE(solve(m, RatVec{Rational(0), Rational(1)}).has_value());
}

TEST_CASE("inverse round trips") {
    SeededRng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(5));
        RatMatrix m = random_matrix(rng, n, n, 5);
        for (int i = 0; i < n; ++i) m.at(i, i) += 10; // keep it nonsingular
        const auto inv = inverse(m);
        REQUIRE(inv.has_value());
        CHECK(m * *inv == RatMatrix::identity(n));
        CHECK(*inv * m == RatMatrix::identity(n));
    }
    RatMatrix sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(1, 0) = 2;
    CHECK_FALSE(inverse(sing).has_value());
}

TEST_CASE("in_span") {
    std::vector<RatVec> span{{Rational(1), Rational(0), Rational(1)},
                             {Rational(0), Rational(1), Rational(1)}};
    CHECK(in_span(span, {Rational(1), Rational(1), Rational(2)}));
    CHECK(in_span(span, {Rational(0), Rational(0), Rational(0)}));
    CHECK_FALSE(in_span(span, {Rational(0), Rational(0), Rational(1)}));
    CHECK_FALSE(in_span({}, {Rational(1)}));
}

TEST_CASE("fraction-free echelon keeps exact pivots on a fraction matrix") {
    // Hilbert-like matrix: notorious for floating point, trivial for exact
    const int n = 6;
    RatMatrix h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.at(i, j) = Rational(1, i + j + 1);
    CHECK(rank(h) == n);
    const auto inv = inverse(h);
    REQUIRE(inv.has_value());
    CHECK(h * *inv == RatMatrix::identity(n));
}
