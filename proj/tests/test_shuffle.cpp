#include <gtest/gtest.h>

#include "superinv/errors.hpp"
#include "superinv/fixtures.hpp"
#include "superinv/shuffle.hpp"
#include "superinv/verify.hpp"
#include "support.hpp"

namespace superinv {
namespace {

using testing::Rng;

TEST(Reynolds, SwapOfOddVariables) {
    const MatrixGroup g = fixtures::symmetric_on_odd(2);
    const AlgebraSignature sig{0, 2, 1};
    const auto t1 = SuperPolynomial::theta(sig, 1, 1), t2 = SuperPolynomial::theta(sig, 1, 2);
    EXPECT_EQ(reynolds_project(t1, GroupAction::of_group(g)), (t1 + t2) * Rational(1, 2));
    EXPECT_EQ(reynolds_project(t1, GroupAction::of_group(g, LinearCharacter::sign_character(g))),
              (t1 - t2) * Rational(1, 2));
    EXPECT_THROW(reynolds_project(SuperPolynomial::theta({0, 1, 1}, 1, 1), GroupAction::of_group(g)), Error);
}

TEST(Reynolds, IdempotentAndFixed) {
    Rng rng(601);
    for (const auto& fx : fixtures::oracle_groups()) {
        SCOPED_TRACE(fx.name);
        const auto action = GroupAction::of_group(fx.group);
        for (int k = 0; k < 4; ++k) {
            const auto f = testing::random_poly(rng, action.sig(), 3);
            const auto p = reynolds_project(f, action);
            EXPECT_EQ(reynolds_project(p, action), p);
            for (const auto& w : action.elements())
                EXPECT_EQ(w.act(p), p);
        }
    }
}

TEST(InvariantBasis, Dimensions) {
    const auto s2_x = GroupAction::of_wreath(symmetric_group(2), fixtures::trivial(1, 0), 2, Flavor::invariant);
    EXPECT_EQ(invariant_basis(s2_x, 2, 0).size(), 2u);  // x1^2 + x2^2, x1 x2
    EXPECT_EQ(invariant_basis(s2_x, 3, 0).size(), 2u);
    const MatrixGroup g = fixtures::symmetric_on_odd(2);
    EXPECT_TRUE(invariant_basis(GroupAction::of_group(g), 0, 2).empty());
    EXPECT_EQ(invariant_basis(GroupAction::of_group(g, LinearCharacter::sign_character(g)), 0, 2).size(), 1u);
}

TEST(Shuffle, ScalarsAndOddSquare) {
    const auto one = SuperPolynomial::constant({1, 1, 1}, 1);
    EXPECT_EQ(shuffle_product(one, one, false), SuperPolynomial::constant({1, 1, 2}, 2));
    EXPECT_EQ(shuffle_product(one, one, true), SuperPolynomial::constant({1, 1, 2}, 0));
    const auto t = SuperPolynomial::theta({0, 1, 1}, 1, 1);
    EXPECT_TRUE(shuffle_product(t, t, false).is_zero());
}

TEST(Shuffle, ClosureExamples) {
    const MatrixGroup g = fixtures::trivial(0, 1);
    const AlgebraSignature two{0, 1, 2}, one{0, 1, 1};
    const auto sum = SuperPolynomial::theta(two, 1, 1) + SuperPolynomial::theta(two, 2, 1);
    const auto diff = SuperPolynomial::theta(two, 1, 1) - SuperPolynomial::theta(two, 2, 1);
    const auto t = SuperPolynomial::theta(one, 1, 1);
    EXPECT_TRUE(verify_closure(sum, t, g, Flavor::invariant));
    EXPECT_TRUE(verify_closure(diff, t, g, Flavor::sgn));
    // Inputs that are not invariant are rejected.
    EXPECT_FALSE(verify_closure(SuperPolynomial::theta(two, 1, 1), t, g, Flavor::invariant));
}

TEST(Shuffle, AssociativityWithUnit) {
    Rng rng(602);
    const auto unit = SuperPolynomial::constant({1, 1, 0}, 1);
    for (int k = 0; k < 10; ++k) {
        const auto a = testing::random_poly(rng, {1, 1, 1}, 3), c = testing::random_poly(rng, {1, 1, 2}, 3);
        EXPECT_TRUE(verify_associativity(a, unit, c, k % 2 == 0));
    }
}

TEST(Shuffle, AssociativityOnSeededTriples) {
    Rng rng(603);
    for (int k = 0; k < 12; ++k) {
        const auto a = testing::random_poly(rng, {1, 1, 1}, 2), b = testing::random_poly(rng, {1, 1, 1}, 2),
                   c = testing::random_poly(rng, {1, 1, 1 + k % 2}, 2);
        EXPECT_TRUE(verify_associativity(a, b, c, false));
        EXPECT_TRUE(verify_associativity(a, b, c, true));
    }
}

TEST(Shuffle, SupercommutationSigns) {
    const AlgebraSignature sig{1, 1, 1};
    const auto x = SuperPolynomial::x(sig, 1, 1), t = SuperPolynomial::theta(sig, 1, 1);
    EXPECT_TRUE(verify_supercommutation(x, x, false));
    EXPECT_TRUE(verify_supercommutation(t, t, false));
    EXPECT_TRUE(verify_supercommutation(x * x, x * t, true));
    EXPECT_TRUE(supercommutation_battery(1, 1).ok());
    EXPECT_THROW(verify_supercommutation(x + t, x, false), Error);
}

TEST(Shuffle, CommutativeWithoutOddVariables) {
    for (const auto& g : {fixtures::trivial(1, 0), fixtures::pm1(), fixtures::symmetric_on_even(2)}) {
        InvariantBasisCache cache(g, Flavor::invariant);
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; a + b <= 3; ++b)
                for (int ia = 0; ia <= 2; ++ia)
                    for (int ib = 0; ib <= 2; ++ib)
                        for (const auto& x : cache.get(a, ia, 0))
                            for (const auto& y : cache.get(b, ib, 0))
                                EXPECT_EQ(shuffle_product(x, y, false), shuffle_product(y, x, false));
    }
}

TEST(Generation, FrozenRanks) {
    auto r = degree_one_generation_rank(fixtures::trivial(0, 1), Flavor::invariant, 2, 0, 1);
    EXPECT_EQ(r.spanned, 1u);
    EXPECT_EQ(r.full, 1u);
    r = degree_one_generation_rank(fixtures::trivial(1, 0), Flavor::invariant, 2, 2, 0);
    EXPECT_EQ(r.spanned, 2u);
    EXPECT_EQ(r.full, 2u);
    r = degree_one_generation_rank(fixtures::pm1(), Flavor::sgn, 1, 3, 0);
    EXPECT_EQ(r.spanned, r.full);
}

TEST(Generation, FullCollationCheck) {
    EXPECT_TRUE(shuffle_algebra_check(fixtures::trivial(1, 0), Flavor::invariant, 3, 4));
    EXPECT_TRUE(shuffle_algebra_check(fixtures::trivial(0, 1), Flavor::invariant, 3, 4));
    EXPECT_TRUE(shuffle_algebra_check(fixtures::pm1(), Flavor::invariant, 2, 4));
    EXPECT_TRUE(shuffle_algebra_check(fixtures::pm1(), Flavor::sgn, 2, 4));
}

TEST(Shuffle, WorkedExamples) {
    EXPECT_TRUE(signed_shuffle_worked_example());
    EXPECT_TRUE(unsigned_shuffle_worked_example());
}

}  // namespace
}  // namespace superinv
