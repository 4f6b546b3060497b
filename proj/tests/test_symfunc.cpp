#include <gtest/gtest.h>

#include "superinv/errors.hpp"
#include "superinv/symfunc.hpp"
#include "support.hpp"

namespace superinv {
namespace {

using testing::Rng;

SymFuncPoly p(std::vector<int> parts, Rational c) { return SymFuncPoly::p(Partition(std::move(parts)), c); }

TEST(Partition, Enumeration) {
    EXPECT_EQ(partitions_of(0).size(), 1u);
    EXPECT_EQ(partitions_of(5).size(), 7u);
    EXPECT_EQ(partitions_of(8).size(), 22u);
    EXPECT_EQ(Partition({1, 3, 2}).parts(), (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(Partition({2}) + Partition({3, 1}), Partition({3, 2, 1}));
    EXPECT_THROW(Partition({2, 0}), Error);
}

TEST(CycleIndex, Frozen) {
    EXPECT_EQ(cycle_index(symmetric_group(3)), p({1, 1, 1}, Rational(1, 6)) + p({2, 1}, Rational(1, 2)) + p({3}, Rational(1, 3)));
    EXPECT_EQ(cycle_index(cyclic_group(4)), p({1, 1, 1, 1}, Rational(1, 4)) + p({2, 2}, Rational(1, 4)) + p({4}, Rational(1, 2)));
    EXPECT_EQ(cycle_index(cyclic_group(4), Flavor::sgn),
              p({1, 1, 1, 1}, Rational(1, 4)) + p({2, 2}, Rational(1, 4)) + p({4}, Rational(-1, 2)));
    EXPECT_EQ(cycle_index(young_subgroup({2, 1})), p({1, 1, 1}, Rational(1, 2)) + p({2, 1}, Rational(1, 2)));
}

TEST(CycleIndex, ExplicitCharacterMatchesFlavor) {
    const PermGroup s4 = symmetric_group(4);
    std::vector<int> chi;
    for (const auto& e : s4.elements())
        chi.push_back(perm_sign(e));
    EXPECT_EQ(cycle_index(s4, chi), cycle_index(s4, Flavor::sgn));
}

TEST(SymFunc, ZLambdaAndBases) {
    EXPECT_EQ(z_lambda(Partition({2, 1, 1})), 4);
    EXPECT_EQ(z_lambda(Partition({3, 3})), 18);
    EXPECT_EQ(z_lambda(Partition()), 1);
    for (int n = 0; n <= 6; ++n) {
        Rational total;
        const SymFuncPoly h = complete_homogeneous(n);
        for (const auto& [l, c] : h.terms())
            total += c;
        EXPECT_EQ(total, 1);
        EXPECT_EQ(omega(complete_homogeneous(n)), elementary(n));
    }
}

SymFuncPoly random_symfunc(Rng& rng, int max_size) {
    SymFuncPoly f;
    std::uniform_int_distribution<int> size(0, max_size);
    for (int k = 0; k < 3; ++k) {
        const auto parts = partitions_of(size(rng));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        f.add_term(parts[pick(rng)], testing::random_rational(rng));
    }
    return f;
}

TEST(SymFunc, OmegaIsAnInvolutiveRingMap) {
    Rng rng(401);
    for (int k = 0; k < 30; ++k) {
        const auto f = random_symfunc(rng, 4), g = random_symfunc(rng, 4);
        EXPECT_EQ(omega(omega(f)), f);
        EXPECT_EQ(omega(f * g), omega(f) * omega(g));
    }
}

TEST(SymFunc, CompositionIsAssociative) {
    Rng rng(402);
    for (int k = 0; k < 15; ++k) {
        const auto f = random_symfunc(rng, 2), g = random_symfunc(rng, 2), h = random_symfunc(rng, 2);
        EXPECT_EQ(plethystic_compose(plethystic_compose(f, g), h), plethystic_compose(f, plethystic_compose(g, h)));
    }
}

TEST(Plethysm, GeometricSeries) {
    // h_2 at 1/(1-q) is 1/((1-q)(1-q^2))
    TrigradedSeries geo(Caps{0, 8, 0});
    for (int i = 0; i <= 8; ++i)
        geo.add_term({0, i, 0}, 1);
    const auto s = plethystic_substitute(cycle_index(symmetric_group(2)), geo);
    const long expected[] = {1, 1, 2, 2, 3, 3, 4, 4, 5};
    for (int i = 0; i <= 8; ++i)
        EXPECT_EQ(s.coeff({0, i, 0}), expected[i]);
    // e_2 at 1/(1-q) is q/((1-q)(1-q^2))
    const auto e = plethystic_substitute(cycle_index(symmetric_group(2), Flavor::sgn), geo);
    for (int i = 1; i <= 8; ++i)
        EXPECT_EQ(e.coeff({0, i, 0}), expected[i - 1]);
}

TEST(Plethysm, SubstitutionIsRingMap) {
    Rng rng(403);
    const Caps caps{2, 4, 2};
    for (int k = 0; k < 10; ++k) {
        TrigradedSeries s(caps);
        for (int a = 0; a < 4; ++a)
            s.add_term({1 + a % 2, a, a % 3}, testing::random_rational(rng));
        const auto f = random_symfunc(rng, 3), g = random_symfunc(rng, 3);
        EXPECT_EQ(plethystic_substitute(f * g, s), plethystic_substitute(f, s) * plethystic_substitute(g, s));
        EXPECT_EQ(plethystic_substitute(f + g, s), plethystic_substitute(f, s) + plethystic_substitute(g, s));
    }
}

}  // namespace
}  // namespace superinv
