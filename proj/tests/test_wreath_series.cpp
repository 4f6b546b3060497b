#include <gtest/gtest.h>

#include "superinv/errors.hpp"
#include "superinv/fixtures.hpp"
#include "superinv/wreath_series.hpp"
#include "support.hpp"

namespace superinv {
namespace {

using testing::Rng;

TrigradedSeries factor(Caps caps, std::initializer_list<std::pair<Exponent, long>> terms) {
    TrigradedSeries s(caps);
    for (const auto& [e, c] : terms)
        s.add_term(e, c);
    return s;
}

TEST(Wreath, S2OnSuperspaceFrozen) {
    const Caps caps{0, 6, 2};
    const auto expected = factor(caps, {{{0, 0, 0}, 1}, {{0, 0, 1}, 1}}) * factor(caps, {{{0, 0, 0}, 1}, {{0, 1, 1}, 1}}) *
                          series_inv(factor(caps, {{{0, 0, 0}, 1}, {{0, 1, 0}, -1}})) *
                          series_inv(factor(caps, {{{0, 0, 0}, 1}, {{0, 2, 0}, -1}}));
    const auto g = fixtures::trivial(1, 1);
    EXPECT_EQ(wreath_hilbert_direct(symmetric_group(2), g, 2, Flavor::invariant, 6), expected);
    EXPECT_EQ(wreath_hilbert_plethysm(symmetric_group(2), g, 2, Flavor::invariant, 6), expected);
}

TEST(Wreath, RoutesAgreeOnSmallCases) {
    const std::vector<std::tuple<PermGroup, MatrixGroup, int>> cases{
        {symmetric_group(2), fixtures::symmetric_on_odd(2), 2},
        {cyclic_group(3), fixtures::pm1(), 3},
        {young_subgroup({2, 1}), fixtures::trivial(1, 1), 3},
        {cyclic_group(4), fixtures::trivial(0, 1), 4},
    };
    for (const auto& [p, g, n] : cases)
        for (Flavor f : {Flavor::invariant, Flavor::sgn})
            EXPECT_EQ(wreath_hilbert_direct(p, g, n, f, 6), wreath_hilbert_plethysm(p, g, n, f, 6));
    EXPECT_THROW(wreath_hilbert_plethysm(symmetric_group(3), fixtures::pm1(), 2, Flavor::invariant, 4), Error);
}

TEST(BlockCycle, FrozenLayout) {
    const QMatrix a{{1}}, b{{2}}, c{{3}};
    const QMatrix m = block_cycle_matrix({a, b, c});
    EXPECT_EQ(m, (QMatrix{{0, 0, 1}, {2, 0, 0}, {0, 3, 0}}));
    // det(I - B) = 1 - 6
    EXPECT_EQ(determinant(QMatrix::identity(3) - m), -5);
    EXPECT_THROW(block_cycle_matrix({QMatrix{{1}}, QMatrix::identity(2)}), Error);
}

TEST(BlockCycle, DeterminantIdentityOnSeededBlocks) {
    Rng rng(501);
    for (int k = 0; k < 40; ++k) {
        const std::size_t r = 1 + k % 3, m = 1 + (k / 3) % 4;
        std::vector<QMatrix> blocks;
        for (std::size_t b = 0; b < m; ++b)
            blocks.push_back(testing::random_matrix(rng, r, r));
        EXPECT_TRUE(verify_block_cycle_determinant(blocks));
    }
}

TEST(MCycle, SwapOnTwoOddVariables) {
    // Average over the 2-cycle equals 1 - u^2.
    const auto avg = m_cycle_average(fixtures::symmetric_on_odd(2), 2, 4);
    EXPECT_EQ(avg, factor({0, 4, 4}, {{{0, 0, 0}, 1}, {{0, 0, 2}, -1}}));
    EXPECT_TRUE(verify_m_cycle_identity(fixtures::symmetric_on_odd(2), 2, 4));
    EXPECT_TRUE(verify_m_cycle_identity(fixtures::pm1(), 2, 8));
    EXPECT_TRUE(verify_m_cycle_identity(fixtures::pm1(), 3, 8));
    EXPECT_TRUE(verify_m_cycle_identity(fixtures::symmetric_diagonal(2), 2, 6));
}

TEST(Collate, SumEqualsProduct) {
    for (const auto& g : {fixtures::trivial(1, 0), fixtures::trivial(0, 1), fixtures::symmetric_on_odd(2)})
        for (Flavor f : {Flavor::invariant, Flavor::sgn}) {
            const CollationSpec spec{g, 3, 4, -1, f};
            EXPECT_EQ(collated_sum_series(spec), collated_product_series(spec));
        }
}

TEST(Collate, MultisymmetricClosedForm) {
    // G trivial on one commuting variable: prod_i 1/(1 - t q^i)
    const Caps caps{3, 5, 0};
    TrigradedSeries expected = TrigradedSeries::one(caps);
    for (int i = 0; i <= 5; ++i)
        expected = expected * series_inv(factor(caps, {{{0, 0, 0}, 1}, {{1, i, 0}, -1}}));
    EXPECT_EQ(collated_sum_series({fixtures::trivial(1, 0), 3, 5, 0, Flavor::invariant}), expected);
}

TEST(Collate, YoungExteriorDependsOnLength) {
    // (3) has length one, (1,1,1) length three.
    EXPECT_EQ(collated_sum_series({fixtures::young_on_exterior({3}), 3, 0, 6, Flavor::invariant}),
              young_exterior_closed_form(1, 3, 6));
    EXPECT_EQ(collated_sum_series({fixtures::young_on_exterior({1, 1, 1}), 2, 0, 6, Flavor::invariant}),
              young_exterior_closed_form(3, 2, 6));
    EXPECT_EQ(collated_sum_series({fixtures::young_on_exterior({1, 2}), 2, 0, 6, Flavor::invariant}),
              collated_sum_series({fixtures::young_on_exterior({2, 1}), 2, 0, 6, Flavor::invariant}));
}

TEST(Collate, ClosedFormFrozenCoefficients) {
    // (1 + tu)^2 / ((1 - t)(1 - tu^2)): t^1 gives 1 + 2u + u^2, t^2 gives 1 + 2u + 2u^2 + 2u^3 + u^4
    const auto s = young_exterior_closed_form(2, 2, 4);
    EXPECT_EQ(s.coeff({1, 0, 0}), 1);
    EXPECT_EQ(s.coeff({1, 0, 1}), 2);
    EXPECT_EQ(s.coeff({1, 0, 2}), 1);
    EXPECT_EQ(s.coeff({2, 0, 0}), 1);
    EXPECT_EQ(s.coeff({2, 0, 1}), 2);
    EXPECT_EQ(s.coeff({2, 0, 2}), 2);
    EXPECT_EQ(s.coeff({2, 0, 3}), 2);
    EXPECT_EQ(s.coeff({2, 0, 4}), 1);
}

TEST(Superspace, ThreeFormsAgree) {
    EXPECT_TRUE(superspace_identity_check(3, 6));
    // n = 2 sgn: (u + 1)(u + q) / ((1 - q)(1 - q^2))
    const auto s = superspace_direct(Flavor::sgn, 2, 3);
    EXPECT_EQ(s.coeff({2, 0, 0}), 0);
    EXPECT_EQ(s.coeff({2, 1, 0}), 1);
    EXPECT_EQ(s.coeff({2, 0, 1}), 1);
    EXPECT_EQ(s.coeff({2, 0, 2}), 1);
    EXPECT_EQ(s.coeff({2, 1, 1}), 2);
}

}  // namespace
}  // namespace superinv
