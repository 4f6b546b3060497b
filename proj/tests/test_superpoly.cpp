#include <gtest/gtest.h>

#include "superinv/errors.hpp"
#include "superinv/permutation.hpp"
#include "superinv/superpoly.hpp"
#include "support.hpp"

namespace superinv {
namespace {

using testing::Rng;

TEST(SuperPoly, NormalizeTheta) {
    auto n = normalize_theta({{1, 2}, {1, 1}});
    EXPECT_EQ(n.sign, -1);
    EXPECT_EQ(n.ordered, (std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}));

    n = normalize_theta({{2, 1}, {1, 2}, {1, 1}});  // reversal of three: odd
    EXPECT_EQ(n.sign, -1);

    n = normalize_theta({{1, 1}, {2, 1}, {1, 1}});
    EXPECT_EQ(n.sign, 0);
    EXPECT_TRUE(n.ordered.empty());
}

TEST(SuperPoly, OddVariablesAnticommute) {
    const AlgebraSignature sig{1, 2, 1};
    const auto a = SuperPolynomial::theta(sig, 1, 1), b = SuperPolynomial::theta(sig, 1, 2);
    const auto x = SuperPolynomial::x(sig, 1, 1);
    EXPECT_EQ(a * b, b * a * Rational(-1));
    EXPECT_TRUE((a * a).is_zero());
    EXPECT_EQ(x * a, a * x);
    EXPECT_EQ(SuperPolynomial::term(sig, 3, {{1, 1, 2}}, {{1, 2}, {1, 1}}),
              x * x * b * a * Rational(3));
}

TEST(SuperPoly, BidegreeBasisCounts) {
    EXPECT_EQ(bidegree_basis({1, 1, 2}, 2, 1).size(), 6u);
    EXPECT_EQ(bidegree_basis({2, 2, 1}, 1, 2).size(), 2u);
    EXPECT_EQ(bidegree_basis({0, 2, 1}, 0, 3).size(), 0u);
    EXPECT_EQ(bidegree_basis({3, 0, 1}, 0, 0).size(), 1u);
    for (const auto& m : bidegree_basis({2, 1, 2}, 3, 1))
        EXPECT_EQ(m.bidegree(), (Bidegree{3, 1}));
}

TEST(SuperPoly, SignatureAndRangeChecks) {
    const AlgebraSignature sig{1, 1, 2};
    EXPECT_THROW(SuperPolynomial::x(sig, 3, 1), Error);
    EXPECT_THROW(SuperPolynomial::theta(sig, 1, 2), Error);
    EXPECT_THROW(SuperPolynomial::x(sig, 1, 1) + SuperPolynomial::x({1, 1, 3}, 1, 1), Error);
}

TEST(SuperPoly, MultiplicationIsAssociativeAndSupercommutative) {
    Rng rng(101);
    const AlgebraSignature sig{2, 2, 2};
    for (int k = 0; k < 40; ++k) {
        const auto a = testing::random_poly(rng, sig, 3), b = testing::random_poly(rng, sig, 3),
                   c = testing::random_poly(rng, sig, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        const int ja = k % 3, jb = (k / 3) % 3;
        const auto ha = testing::random_homogeneous(rng, sig, 1, ja), hb = testing::random_homogeneous(rng, sig, 1, jb);
        EXPECT_EQ(ha * hb, hb * ha * Rational((ja * jb) % 2 ? -1 : 1));
    }
}

TEST(SuperPoly, RowPermutationRelabelsByInverse) {
    const AlgebraSignature sig{1, 1, 3};
    const Permutation sigma({2, 3, 1});
    EXPECT_EQ(apply_row_permutation(sigma, SuperPolynomial::x(sig, 1, 1)), SuperPolynomial::x(sig, 3, 1));
    EXPECT_EQ(apply_row_permutation(sigma, SuperPolynomial::theta(sig, 2, 1)), SuperPolynomial::theta(sig, 1, 1));
    // theta_1 theta_2 -> theta_3 theta_1 = -theta_1 theta_3
    EXPECT_EQ(apply_row_permutation(sigma, SuperPolynomial::term(sig, 1, {}, {{1, 1}, {2, 1}})),
              SuperPolynomial::term(sig, -1, {}, {{1, 1}, {3, 1}}));
}

TEST(SuperPoly, RowPermutationComposesContravariantly) {
    Rng rng(102);
    const AlgebraSignature sig{1, 2, 4};
    for (int k = 0; k < 50; ++k) {
        const Permutation s = testing::random_permutation(rng, 4), t = testing::random_permutation(rng, 4);
        const auto f = testing::random_poly(rng, sig, 4);
        EXPECT_EQ(apply_row_permutation(s, apply_row_permutation(t, f)), apply_row_permutation(t * s, f));
        EXPECT_EQ(apply_row_permutation(s, f * f), apply_row_permutation(s, f) * apply_row_permutation(s, f));
    }
}

TEST(SuperPoly, GradedSubstitutionFrozen) {
    const AlgebraSignature sig{2, 2, 1};
    const QMatrix swap{{0, 1}, {1, 0}};
    // theta_1 theta_2 -> theta_2 theta_1
    const auto f = SuperPolynomial::term(sig, 1, {{1, 1, 2}}, {{1, 1}, {1, 2}});
    EXPECT_EQ(apply_graded_element(swap, swap, 1, f), SuperPolynomial::term(sig, -1, {{1, 2, 2}}, {{1, 1}, {1, 2}}));
    // x_1 -> x_1 + x_2
    const QMatrix shear{{1, 0}, {1, 1}};
    EXPECT_EQ(apply_graded_element(shear, QMatrix::identity(2), 1, SuperPolynomial::x(sig, 1, 1, 2)),
              SuperPolynomial::x(sig, 1, 1, 2) + SuperPolynomial::x(sig, 1, 2, 2) +
                  SuperPolynomial::term(sig, 2, {{1, 1, 1}, {1, 2, 1}}, {}));
}

// Permutation matrices take a dedicated path; mixing them with dense matrices in the
// composition law cross-checks it against the general substitution.
TEST(SuperPoly, GradedSubstitutionIsAnAction) {
    Rng rng(103);
    const AlgebraSignature sig{2, 2, 2};
    for (int k = 0; k < 30; ++k) {
        const int row = 1 + k % 2;
        const QMatrix p0 = testing::random_signed_permutation_matrix(rng, 2),
                      p1 = testing::random_signed_permutation_matrix(rng, 2);
        const QMatrix d0 = testing::random_matrix(rng, 2, 2), d1 = testing::random_matrix(rng, 2, 2);
        const auto f = testing::random_poly(rng, sig, 3);
        EXPECT_EQ(apply_graded_element(p0, p1, row, apply_graded_element(d0, d1, row, f)),
                  apply_graded_element(p0 * d0, p1 * d1, row, f));
        EXPECT_EQ(apply_graded_element(d0, d1, row, apply_graded_element(p0, p1, row, f)),
                  apply_graded_element(d0 * p0, d1 * p1, row, f));
        EXPECT_EQ(apply_graded_element(p0, p1, row, f * f),
                  apply_graded_element(p0, p1, row, f) * apply_graded_element(p0, p1, row, f));
    }
}

TEST(SuperPoly, ShiftRows) {
    const auto f = SuperPolynomial::term({1, 1, 1}, 2, {{1, 1, 3}}, {{1, 1}});
    EXPECT_EQ(shift_rows(f, 2, 3), SuperPolynomial::term({1, 1, 3}, 2, {{3, 1, 3}}, {{3, 1}}));
}

}  // namespace
}  // namespace superinv
