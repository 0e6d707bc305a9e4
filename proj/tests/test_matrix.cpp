#include "ampli/combinatorics.hpp"
#include "ampli/matrix.hpp"
#include "ampli/prng.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ampli;

namespace {

Matrix from_ints(int rows, int cols, std::initializer_list<int> vals) {
    Matrix m(rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = *it++;
    return m;
}

Matrix random_matrix(int rows, int cols, Prng& prng, int lo = -6, int hi = 6) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rational(prng.int_in(lo, hi));
    return m;
}

}  // namespace

TEST(Rational, ParseAndFormatRoundTrip) {
    EXPECT_EQ(rational_to_string(parse_rational("3/4")), "3/4");
    EXPECT_EQ(rational_to_string(parse_rational("-6/8")), "-3/4");
    EXPECT_EQ(rational_to_string(parse_rational("5")), "5");
    EXPECT_EQ(rational_to_string(parse_rational("0")), "0");
    EXPECT_EQ(rational_to_string(parse_rational("3/-4")), "-3/4");  // sign canonicalized
    EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Determinant, HandExpansionCases) {
    EXPECT_EQ(determinant(from_ints(2, 2, {1, 1, 1, 2})), Rational(1));
    EXPECT_EQ(determinant(Matrix::identity(4)), Rational(1));
}

TEST(Determinant, VandermondeAgainstCofactorOracle) {
    // Nodes 1, 2, 3: the oracle gives (2-1)(3-1)(3-2) = 2.
    Matrix v = from_ints(3, 3, {1, 1, 1, 1, 2, 4, 1, 3, 9});
    EXPECT_EQ(oracle::laplace_determinant(v), Rational(2));
    EXPECT_EQ(determinant(v), Rational(2));
}

TEST(Determinant, MatchesCofactorOracleOnRandomRationalMatrices) {
    Prng prng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(prng.below(5));
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = Rational(prng.int_in(-8, 8), prng.int_in(1, 5));
        EXPECT_EQ(determinant(m), oracle::laplace_determinant(m));
    }
}

TEST(Determinant, AlternatingUnderRowSwap) {
    Prng prng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(prng.below(4));
        Matrix m = random_matrix(n, n, prng);
        const int r1 = static_cast<int>(prng.below(n));
        int r2 = static_cast<int>(prng.below(n));
        if (r1 == r2) r2 = (r2 + 1) % n;
        Matrix swapped = m;
        swapped.swap_rows(r1, r2);
        EXPECT_EQ(determinant(swapped), Rational(-determinant(m)));
    }
}

TEST(Determinant, MultiplicativeOnRandomPairs) {
    Prng prng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(prng.below(5));
        Matrix a = random_matrix(n, n, prng);
        Matrix b = random_matrix(n, n, prng);
        EXPECT_EQ(determinant(multiply(a, b)), determinant(a) * determinant(b));
    }
}

TEST(Determinant, RejectsNonSquare) {
    EXPECT_THROW(determinant(Matrix(2, 3)), ContractError);
}

TEST(Rank, DetectsDependentRows) {
    Matrix m = from_ints(3, 3, {1, 2, 3, 2, 4, 6, 0, 1, 1});
    EXPECT_EQ(rank(m), 2);
    EXPECT_EQ(rank(Matrix::identity(5)), 5);
    EXPECT_EQ(rank(Matrix(3, 4)), 0);
}

TEST(Solve, UniqueInconsistentAndUnderdetermined) {
    Matrix a = from_ints(2, 2, {1, 1, 1, 2});
    auto x = solve_unique(a, {Rational(3), Rational(5)});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], Rational(1));
    EXPECT_EQ((*x)[1], Rational(2));

    Matrix inconsistent = from_ints(2, 1, {1, 1});
    EXPECT_FALSE(solve_unique(inconsistent, {Rational(1), Rational(2)}).has_value());

    Matrix under = from_ints(1, 2, {1, 1});
    EXPECT_FALSE(solve_unique(under, {Rational(1)}).has_value());
}

TEST(Plucker, HandComputedCases) {
    EXPECT_EQ(plucker(from_ints(2, 3, {1, 0, 0, 0, 1, 0}), {1, 2}), Rational(1));
    EXPECT_EQ(plucker(from_ints(1, 3, {1, 1, 1}), {2}), Rational(1));
    Matrix c = from_ints(2, 3, {1, 1, 1, 1, 2, 3});
    EXPECT_EQ(plucker(c, {1, 3}), Rational(2));
    EXPECT_THROW(plucker(c, {3, 1}), ContractError);
    EXPECT_THROW(plucker(c, {1}), ContractError);
}

TEST(PluckerSigned, RepeatsAndTranspositions) {
    Matrix c = from_ints(2, 3, {1, 1, 1, 1, 2, 3});
    EXPECT_EQ(plucker_signed(c, {2, 2}), Rational(0));
    EXPECT_EQ(plucker_signed(c, {3, 1}), Rational(-2));
    EXPECT_EQ(plucker_signed(c, {3, 1}), Rational(-plucker(c, {1, 3})));
}

TEST(PluckerSigned, PermutationSignProperty) {
    Prng prng(51);
    Matrix c(3, 7);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 7; ++j) c(i, j) = Rational(prng.int_in(-5, 5));
    for (int trial = 0; trial < 40; ++trial) {
        IndexList cols(3);
        for (int& v : cols) v = 1 + static_cast<int>(prng.below(7));
        IndexList shuffled = cols;
        for (int i = 2; i > 0; --i)
            std::swap(shuffled[i], shuffled[prng.below(static_cast<std::uint64_t>(i) + 1)]);
        // The relative sign of the two orderings is the sign of the permutation
        // between them; both sides evaluated through the signed minor.
        Rational lhs = plucker_signed(c, shuffled);
        const int s_orig = sort_sign(cols);
        const int s_shuf = sort_sign(shuffled);
        if (s_orig == 0) {
            EXPECT_EQ(lhs, Rational(0));
        } else {
            Rational rhs = plucker_signed(c, cols);
            EXPECT_EQ(lhs, s_orig == s_shuf ? rhs : Rational(-rhs));
        }
    }
}
