#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "whit/zeta.hpp"

using namespace whit;

namespace {

SatakeParams abc() { return SatakeParams({rational(1, 2), rational(1, 3), rational(0)}); }

}  // namespace

TEST(ZetaSeries, Examples) {
    const TruncSeries z2 = zeta_series(SatakeParams({rational(1, 2), rational(0)}), 3);
    EXPECT_EQ(z2.coeff(0), rational(1));
    EXPECT_EQ(z2.coeff(1), rational(1, 2));
    EXPECT_EQ(z2.coeff(2), rational(1, 4));
    EXPECT_EQ(z2.coeff(3), rational(1, 8));

    const TruncSeries z0 = zeta_series(SatakeParams({rational(0), rational(0), rational(0)}), 2);
    EXPECT_EQ(z0.coeff(0), rational(1));
    EXPECT_EQ(z0.coeff(1), rational(0));
    EXPECT_EQ(z0.coeff(2), rational(0));

    const TruncSeries z3 = zeta_series(abc(), 2);
    EXPECT_EQ(z3.coeff(1), rational(5, 6));
    EXPECT_EQ(z3.coeff(2), rational(19, 36));

    EXPECT_THROW(zeta_series(abc(), -1), std::invalid_argument);
}

TEST(ZetaSeries, CoefficientsAreCompleteHomogeneous) {
    std::mt19937_64 g(41u);
    for (int t = 0; t < 10; ++t) {
        const int n = 2 + static_cast<int>(g() % 4);
        const SatakeParams a = testutil::random_alpha(g, n, t % 2 == 0);
        const TruncSeries z = zeta_series(a, 8);
        for (int k = 0; k <= 8; ++k) EXPECT_EQ(z.coeff(k), complete_homogeneous(k, a));
    }
}

TEST(LfactorSeries, Examples) {
    const TruncSeries l2 = lfactor_series(SatakeParams({rational(1, 2), rational(0)}), 2);
    EXPECT_EQ(l2.coeff(0), rational(1));
    EXPECT_EQ(l2.coeff(1), rational(1, 2));
    EXPECT_EQ(l2.coeff(2), rational(1, 4));

    const TruncSeries l0 = lfactor_series(SatakeParams({rational(0), rational(0)}), 5);
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(l0.coeff(k), rational(0));

    const TruncSeries l3 = lfactor_series(abc(), 2);
    EXPECT_EQ(l3.coeff(1), rational(5, 6));
    EXPECT_EQ(l3.coeff(2), rational(19, 36));
}

TEST(ZetaEqualsLfactor, SpotInstances) {
    EXPECT_TRUE(zeta_equals_lfactor(abc(), 30).equal);
    EXPECT_TRUE(zeta_equals_lfactor(SatakeParams({rational(7, 4), rational(0)}), 20).equal);
    const ZetaReport zr = zeta_equals_lfactor(SatakeParams({rational(0), rational(0)}), 10);
    EXPECT_TRUE(zr.equal);
    EXPECT_EQ(zr.first_mismatch, -1);
    EXPECT_THROW(zeta_equals_lfactor(abc(), 0), std::invalid_argument);
}

TEST(ZetaEqualsLfactor, RandomParameters) {
    std::mt19937_64 g(42u);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 4; ++t)
            EXPECT_TRUE(zeta_equals_lfactor(testutil::random_alpha(g, n, t % 2 == 0), 15).equal);
}

TEST(ZetaEqualsLfactor, DenominatorTimesZetaIsOne) {
    // restatement through the h/e duality: prod (1 - a_i X) * Z = 1
    std::mt19937_64 g(43u);
    const int order = 15;
    TruncSeries one(order);
    one.set_coeff(0, rational(1));
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 4; ++t) {
            const SatakeParams a = testutil::random_alpha(g, n, t % 2 == 0);
            const TruncSeries den = TruncSeries::from_poly(product_one_minus(a.alphas()), order);
            EXPECT_EQ(den * zeta_series(a, order), one);
        }
}
