#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "superinv/errors.hpp"
#include "superinv/matrix.hpp"
#include "superinv/rational.hpp"
#include "superinv/series.hpp"
#include "support.hpp"

namespace superinv {
namespace {

using testing::Rng;

// Leibniz expansion, independent of the fraction-free kernel.
Rational leibniz_det(const QMatrix& m) {
    std::vector<int> p(m.rows());
    std::iota(p.begin(), p.end(), 0);
    Rational total;
    do {
        int inv = 0;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                inv += p[a] > p[b];
        Rational term = inv % 2 ? -1 : 1;
        for (std::size_t r = 0; r < p.size(); ++r)
            term *= m(r, static_cast<std::size_t>(p[r]));
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
    EXPECT_EQ(Rational::parse("-7").str(), "-7");
    EXPECT_EQ(Rational(2, -4).str(), "-1/2");
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("abc"), Error);
    EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, Binomial) {
    EXPECT_EQ(binomial(4, 2), 6);
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(binomial(30, 15), Rational::parse("155117520"));
}

TEST(Rational, FieldAxiomsOnSeededSamples) {
    Rng rng(11);
    for (int k = 0; k < 300; ++k) {
        const Rational a = testing::random_rational(rng, 9, 7), b = testing::random_rational(rng, 9, 7),
                       c = testing::random_rational(rng, 9, 7);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        if (!b.is_zero())
            EXPECT_EQ(a / b * b, a);
    }
}

TEST(Matrix, CharpolyFrozenValues) {
    EXPECT_EQ(charpoly_det(QMatrix{{1}}), UniPoly({1, -1}));
    EXPECT_EQ(charpoly_det(QMatrix()), UniPoly({1}));
    // [[0,1],[1,0]]: det(I - zM) = 1 - z^2
    EXPECT_EQ(charpoly_det(QMatrix{{0, 1}, {1, 0}}), UniPoly({1, 0, -1}));
    EXPECT_THROW(charpoly_det(QMatrix(2, 3)), Error);
    EXPECT_THROW(determinant(QMatrix(1, 2)), Error);
}

TEST(Matrix, DeterminantMatchesLeibniz) {
    Rng rng(5);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = 1 + k % 5;
        const QMatrix m = testing::random_matrix(rng, n, n);
        EXPECT_EQ(determinant(m), leibniz_det(m));
    }
}

TEST(Matrix, CharpolyAgreesWithPointEvaluation) {
    Rng rng(6);
    for (int k = 0; k < 30; ++k) {
        const std::size_t n = 1 + k % 4;
        const QMatrix m = testing::random_matrix(rng, n, n);
        const UniPoly p = charpoly_det(m);
        EXPECT_LE(p.degree(), static_cast<int>(n));
        for (long z : {-2L, 1L, 3L})
            EXPECT_EQ(p.eval(z), leibniz_det(QMatrix::identity(n) - m * Rational(z)));
    }
}

TEST(Matrix, DeterminantIsMultiplicative) {
    Rng rng(7);
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = 1 + k % 4;
        const QMatrix a = testing::random_matrix(rng, n, n), b = testing::random_matrix(rng, n, n);
        EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    }
}

TEST(Matrix, RankProperties) {
    EXPECT_EQ(matrix_rank(QMatrix{{1, 2}, {2, 4}}), 1u);
    EXPECT_EQ(matrix_rank(QMatrix(3, 3)), 0u);
    EXPECT_EQ(independent_rows(QMatrix{{1, 0}, {2, 0}, {0, 1}}), (std::vector<std::size_t>{0, 2}));
    Rng rng(8);
    for (int k = 0; k < 40; ++k) {
        // Product of an r x 2 and a 2 x c matrix has rank at most 2.
        const std::size_t r = 2 + k % 3, c = 2 + (k / 3) % 3;
        const QMatrix low = testing::random_matrix(rng, r, 2) * testing::random_matrix(rng, 2, c);
        EXPECT_LE(matrix_rank(low), 2u);
        const QMatrix m = testing::random_matrix(rng, r, c);
        EXPECT_EQ(matrix_rank(m), matrix_rank(m.transpose()));
        EXPECT_EQ(independent_rows(m).size(), matrix_rank(m));
    }
}

TEST(Series, TruncatedPowerFrozen) {
    const Caps caps{0, 0, 1};
    TrigradedSeries s = TrigradedSeries::one(caps);
    s.add_term({0, 0, 1}, 1);
    const TrigradedSeries sq = s * s;
    EXPECT_EQ(sq.coeff({0, 0, 0}), 1);
    EXPECT_EQ(sq.coeff({0, 0, 1}), 2);
    EXPECT_EQ(sq.terms().size(), 2u);
}

TEST(Series, InverseOfGeometric) {
    const Caps caps{0, 5, 0};
    TrigradedSeries s = TrigradedSeries::one(caps);
    s.add_term({0, 1, 0}, -1);
    const TrigradedSeries inv = series_inv(s);
    for (int i = 0; i <= 5; ++i)
        EXPECT_EQ(inv.coeff({0, i, 0}), 1);
    EXPECT_THROW(series_inv(TrigradedSeries::monomial(1, {0, 1, 0}, caps)), Error);
}

TEST(Series, TruncateCannotRaiseCaps) {
    const TrigradedSeries s = TrigradedSeries::one({1, 1, 1});
    EXPECT_THROW(truncate(s, {2, 1, 1}), Error);
    EXPECT_EQ(truncate(s, {0, 1, 0}).caps(), (Caps{0, 1, 0}));
}

TrigradedSeries random_unit_series(Rng& rng, Caps caps) {
    TrigradedSeries s = TrigradedSeries::constant(testing::random_rational(rng) + Rational(7), caps);
    for (int k = 0; k < 6; ++k) {
        std::uniform_int_distribution<int> t(0, caps.t), q(0, caps.q), u(0, caps.u);
        s.add_term({t(rng), q(rng), u(rng)}, testing::random_rational(rng));
    }
    return s;
}

TEST(Series, SeededInverseAndPowerLaws) {
    Rng rng(21);
    const Caps caps{2, 3, 2};
    for (int k = 0; k < 25; ++k) {
        const TrigradedSeries s = random_unit_series(rng, caps);
        EXPECT_EQ(s * series_inv(s), TrigradedSeries::one(caps));
        EXPECT_EQ(series_pow_int(s, 2) * series_pow_int(s, -3), series_inv(s));
        EXPECT_EQ(flip_u(flip_u(s)), s);
        EXPECT_EQ(flip_t(s * s), flip_t(s) * flip_t(s));
    }
}

TEST(Series, ScaleExponentsIsRingMap) {
    Rng rng(22);
    const Caps caps{1, 6, 4};
    for (int k = 0; k < 10; ++k) {
        const TrigradedSeries a = random_unit_series(rng, caps), b = random_unit_series(rng, caps);
        EXPECT_EQ(scale_exponents(a * b, 2), scale_exponents(a, 2) * scale_exponents(b, 2));
    }
}

TEST(Series, TableRendering) {
    const Caps caps{0, 1, 1};
    TrigradedSeries s = TrigradedSeries::one(caps);
    s.add_term({0, 1, 1}, Rational(-1, 2));
    const std::string table = render_table(s);
    EXPECT_NE(table.find("-1/2"), std::string::npos);
    EXPECT_EQ(table, render_table(s));
}

}  // namespace
}  // namespace superinv
