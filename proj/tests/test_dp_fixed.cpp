#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "metdp/dp_fixed.hpp"
#include "metdp/errors.hpp"
#include "metdp/worked_example.hpp"
#include "oracles.hpp"

namespace metdp {
namespace {

TEST(FixedN, TwoSpikeOtsuSplitsBetweenTheSpikes) {
    std::vector<std::uint64_t> c(19, 0);
    c[2] = 1;
    c[16] = 1;
    const auto sm = build_score_matrix(GrayHistogram(c), ObjectiveKind::Otsu, BoundaryMode::Disjoint);
    const auto r = solve_fixed_n(sm, 1);
    ASSERT_EQ(r.count(), 1u);
    EXPECT_EQ(r.thresholds[0], 3);  // smallest threshold reaching the maximum
    EXPECT_DOUBLE_EQ(r.objective_value, 49.0);
}

TEST(FixedN, ReferenceKittlerDisjoint) {
    const auto sm = build_score_matrix(example_histogram(), ObjectiveKind::Kittler, BoundaryMode::Disjoint);
    const auto r = solve_fixed_n(sm, 5);
    EXPECT_EQ(r.thresholds, (std::vector<Level>{4, 6, 8, 10, 12}));
    EXPECT_NEAR(r.objective_value, 1.775, 5e-4);
}

TEST(FixedN, ReferenceMetOverlappingTwoThresholds) {
    const auto sm = build_score_matrix(example_histogram(), ObjectiveKind::Met, BoundaryMode::Overlapping);
    const auto r = solve_fixed_n(sm, 2);
    EXPECT_EQ(r.thresholds, (std::vector<Level>{5, 11}));
    EXPECT_NEAR(r.objective_value, 1.901, 5e-4);
}

TEST(FixedN, SaturatedCountUsesEveryInteriorLevel) {
    const auto sm = build_score_matrix(example_histogram(), ObjectiveKind::Otsu, BoundaryMode::Disjoint);
    const auto r = solve_fixed_n(sm, 17);
    std::vector<Level> all(17);
    std::iota(all.begin(), all.end(), 1);
    EXPECT_EQ(r.thresholds, all);
}

TEST(FixedN, RejectsBadCounts) {
    const auto sm = build_score_matrix(example_histogram(), ObjectiveKind::Otsu, BoundaryMode::Disjoint);
    EXPECT_THROW(solve_fixed_n(sm, 0), InputError);
    EXPECT_THROW(solve_fixed_n(sm, 18), InputError);
    EXPECT_THROW(solve_fixed_n(sm, -2), InputError);
}

TEST(FixedN, InfeasibleWhenEveryPartitionIsDegenerate) {
    std::vector<std::uint64_t> c(8, 0);
    c[3] = 50;
    const auto sm = build_score_matrix(GrayHistogram(c), ObjectiveKind::Kittler, BoundaryMode::Disjoint);
    EXPECT_THROW(solve_fixed_n(sm, 1), InfeasibleError);
    EXPECT_THROW(solve_fixed_n(sm, 3), InfeasibleError);
}

TEST(FixedN, TablesStayInsideTheFeasibleBand) {
    const auto sm = build_score_matrix(example_histogram(), ObjectiveKind::Otsu, BoundaryMode::Disjoint);
    const int n = 4;
    const auto t = fill_fixed_n_tables(sm, n);
    EXPECT_EQ(t.thresholds, n);
    for (int layer = 1; layer < n; ++layer) {
        for (Level j = layer + 1; j <= 18 - n + layer; ++j) {
            const Level k = t.predecessor(layer, j);
            EXPECT_GE(k, layer);
            EXPECT_LT(k, j);
        }
    }
}

TEST(FixedN, Deterministic) {
    std::mt19937_64 rng(31);
    const auto h = oracle::random_histogram(rng, 200, 0.1, 5000);
    for (auto kind : {ObjectiveKind::Otsu, ObjectiveKind::Kapur, ObjectiveKind::Kittler}) {
        const auto sm = build_score_matrix(h, kind, BoundaryMode::Disjoint);
        EXPECT_EQ(solve_fixed_n(sm, 6), solve_fixed_n(sm, 6));
    }
}

TEST(FixedN, SweepMatchesIndependentSolves) {
    const auto h = example_histogram();
    const auto sweep = sweep_optimal_values(h, ObjectiveKind::Kapur, BoundaryMode::Disjoint, 8);
    ASSERT_EQ(sweep.size(), 8u);
    const auto sm = build_score_matrix(h, ObjectiveKind::Kapur, BoundaryMode::Disjoint);
    for (const auto& p : sweep) EXPECT_EQ(p.result, solve_fixed_n(sm, p.n));
}

// Exhaustive enumeration is the reference for every objective and mode.
TEST(FixedNProperty, MatchesExhaustiveSearch) {
    std::mt19937_64 rng(32);
    const std::pair<ObjectiveKind, BoundaryMode> combos[] = {
        {ObjectiveKind::Otsu, BoundaryMode::Disjoint},
        {ObjectiveKind::Kapur, BoundaryMode::Disjoint},
        {ObjectiveKind::Kittler, BoundaryMode::Disjoint},
        {ObjectiveKind::Met, BoundaryMode::Overlapping},
        {ObjectiveKind::Kittler, BoundaryMode::Overlapping}};
    int compared = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int levels = 3 + static_cast<int>(rng() % 22);
        // Small counts on few levels make exact ties common.
        const auto h = oracle::random_histogram(rng, levels, trial % 3 == 0 ? 0.6 : 0.2,
                                                trial % 2 == 0 ? 3 : 1000);
        if (h.total() == 0) continue;
        const int n = 1 + static_cast<int>(rng() % std::min(4, levels - 2));
        for (auto [kind, mode] : combos) {
            const auto sm = build_score_matrix(h, kind, mode);
            const auto expected = oracle::exhaustive_fixed(sm, n);
            if (!expected) {
                EXPECT_THROW(solve_fixed_n(sm, n), InfeasibleError);
                continue;
            }
            const auto got = solve_fixed_n(sm, n);
            EXPECT_EQ(got.objective_value, expected->value);
            EXPECT_EQ(got.thresholds, expected->thresholds)
                << "L=" << levels << " n=" << n << " kind=" << to_string(kind);
            ++compared;
        }
    }
    EXPECT_GT(compared, 300);
}

TEST(FixedNProperty, OtsuAndKapurNeverGetWorseWithMoreThresholds) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = oracle::random_histogram(rng, 64, 0.1, 2000);
        for (auto kind : {ObjectiveKind::Otsu, ObjectiveKind::Kapur}) {
            const auto sweep = sweep_optimal_values(h, kind, BoundaryMode::Disjoint, 10);
            for (std::size_t i = 1; i < sweep.size(); ++i) {
                EXPECT_GE(sweep[i].result.objective_value, sweep[i - 1].result.objective_value - 1e-12);
            }
        }
    }
}

TEST(FixedNProperty, ReportedValueMatchesReevaluation) {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        const auto h = oracle::random_histogram(rng, 96, 0.05, 500);
        for (auto kind : {ObjectiveKind::Otsu, ObjectiveKind::Kapur, ObjectiveKind::Kittler}) {
            const auto sm = build_score_matrix(h, kind, BoundaryMode::Disjoint);
            const auto r = solve_fixed_n(sm, 1 + trial % 7);
            EXPECT_EQ(r.objective_value, evaluate_thresholds(sm, r.thresholds));
            EXPECT_NO_THROW(validate_thresholds(r.thresholds, 96));
        }
    }
}

}  // namespace
}  // namespace metdp
