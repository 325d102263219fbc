#include <cmath>

#include <gtest/gtest.h>

#include "isoperim/report.hpp"
#include "isoperim/search.hpp"

using namespace isoperim;

TEST(PerturbationScan, ZeroAmplitudeIsExact) {
    const ScanResult scan = perturbation_scan(1.0, 4, 0.0, 10, 99);
    for (const ScanRow& row : scan.rows) EXPECT_NEAR(row.deficit, 0.0, 1e-9);
}

TEST(PerturbationScan, FixedAreaNormalization) {
    SplitMix64 rng(123);
    for (int i = 0; i < 10; ++i) {
        Domain d = random_star(rng, 6, 0.4);
        d = scaled(d, std::sqrt(kPi / area(d)));
        EXPECT_NEAR(area(d), kPi, 1e-9);
    }
}

TEST(PerturbationScan, PositiveDeficitsUnderPerturbation) {
    const ScanResult scan = perturbation_scan(1.0, 4, 0.1, 50, 2024);
    EXPECT_GT(scan.min_deficit, 0.0);
    const ScanResult negative_p = perturbation_scan(-0.5, 4, 0.1, 50, 2024);
    EXPECT_GE(negative_p.min_deficit, -1e-7);
    for (const ScanRow& row : negative_p.rows) EXPECT_EQ(row.verdict, Verdict::holds);
}

TEST(PerturbationScan, SeedReproducibility) {
    const ScanResult a = perturbation_scan(0.5, 5, 0.2, 25, 77);
    const ScanResult b = perturbation_scan(0.5, 5, 0.2, 25, 77);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].lhs, b.rows[i].lhs);
        EXPECT_EQ(a.rows[i].rhs, b.rows[i].rhs);
        EXPECT_EQ(a.rows[i].deficit, b.rows[i].deficit);
    }
    EXPECT_EQ(scan_csv(a), scan_csv(b));
    EXPECT_EQ(scan_summary_json(a).dump(), scan_summary_json(b).dump());
}

TEST(TranslateScan, ClassicalCaseIsFlat) {
    const ScanResult scan = translate_scan(1.0, 0.0, {0.0, 0.4, 1.5, 5.0});
    for (const ScanRow& row : scan.rows) EXPECT_NEAR(row.deficit, 0.0, 1e-9);
}

TEST(TranslateScan, DeficitGrowsWithOffset) {
    {
        const ScanResult scan = translate_scan(1.0, 1.0, {0.0, 0.2, 0.5});
        EXPECT_NEAR(scan.rows[0].deficit, 0.0, 1e-9);
        EXPECT_GT(scan.rows[1].deficit, 1e-4);
        EXPECT_GT(scan.rows[2].deficit, scan.rows[1].deficit);
    }
    {
        const ScanResult scan = translate_scan(1.0, -0.5, {0.0, 0.3, 0.6});
        EXPECT_NEAR(scan.rows[0].deficit, 0.0, 1e-9);
        EXPECT_GT(scan.rows[1].deficit, 0.0);
        EXPECT_GT(scan.rows[2].deficit, scan.rows[1].deficit);
        for (const ScanRow& row : scan.rows) EXPECT_EQ(row.verdict, Verdict::holds);
    }
    EXPECT_THROW(translate_scan(1.0, -0.5, {1.5}), PreconditionError);
}

TEST(TwoBallThreshold, FirstOrderOracleLocation) {
    // First-order oracle: 1 + s^{-1/2} = 2^{1/4}  =>  s = 27.94.
    const TwoBallThreshold th = two_ball_threshold(1.0, -0.5);
    EXPECT_NEAR(th.separation, 27.94, 0.5);
    EXPECT_LT(th.bracket_hi - th.bracket_lo, 1e-6);
    // The bisection trace must bracket a genuine sign change.
    bool saw_positive = false, saw_negative = false;
    for (const ScanRow& row : th.trace.rows) {
        saw_positive = saw_positive || row.deficit > 0;
        saw_negative = saw_negative || row.deficit < 0;
    }
    EXPECT_TRUE(saw_positive);
    EXPECT_TRUE(saw_negative);
    EXPECT_EQ(th.trace.crossings.size(), 1u);
}

TEST(TwoBallThreshold, ScalingCovariance) {
    const TwoBallThreshold a = two_ball_threshold(1.0, -0.5);
    const TwoBallThreshold b = two_ball_threshold(2.0, -0.5);
    EXPECT_NEAR(b.separation, 2.0 * a.separation, 1e-5 * b.separation);
}

TEST(TwoBallThreshold, MinusOneHasNoCrossing) {
    // lhs = (2r^2/r^2... )^0 = 1 while the circle average of |x|^{-1} exceeds
    // 1/s (subharmonicity), so the deficit stays positive for every s.
    EXPECT_THROW(two_ball_threshold(1.0, -1.0), NotFoundError);
    EXPECT_THROW(two_ball_threshold(1.0, 0.0), RangeError);
    EXPECT_THROW(two_ball_threshold(1.0, -1.5), RangeError);
}

TEST(ScanResult, NoiseLevelSignFlipsAreNotCrossings) {
    // A flat translation scan at p = 0 wobbles around zero at roundoff level;
    // that must not register as a sign change.
    const ScanResult scan = translate_scan(1.0, 0.0, {0.0, 0.5, 1.0, 2.0});
    EXPECT_TRUE(scan.crossings.empty());
}
