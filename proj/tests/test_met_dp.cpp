#include <gtest/gtest.h>

#include <random>

#include "metdp/errors.hpp"
#include "metdp/met_dp.hpp"
#include "metdp/worked_example.hpp"
#include "oracles.hpp"

namespace metdp {
namespace {

ScoreMatrix example_matrix(BoundaryMode mode) {
    return build_score_matrix(example_histogram(), ObjectiveKind::Met, mode);
}

// Right-to-left chain sum, the association the table fill uses.
double chain_from_top(const ScoreMatrix& sm, const std::vector<Level>& t) {
    double sum = sm.last_region(t.empty() ? 0 : t.back());
    for (std::size_t i = t.size(); i-- > 0;) sum = sm.region(i == 0 ? 0 : t[i - 1], t[i]) + sum;
    return sum;
}

TEST(MetDp, ReferenceOverlappingRoot) {
    const auto sm = example_matrix(BoundaryMode::Overlapping);
    const auto tables = fill_tables(sm, TableVariant::FullIndices);
    EXPECT_NEAR(tables.mem(0, 18), 1.901, 5e-4);
    EXPECT_NEAR(tables.mem(8, 17), 1.192, 5e-4);
    EXPECT_EQ(tables.split(8, 17), 11);
    EXPECT_NEAR(tables.mem(11, 17), 0.738, 5e-4);
    EXPECT_EQ(tables.split(11, 17), 17);
    EXPECT_FALSE(is_valid_score(tables.mem(0, 1)));
    EXPECT_FALSE(is_valid_score(tables.mem(0, 2)));
    const auto r = backtrack(tables);
    EXPECT_EQ(r.thresholds, (std::vector<Level>{5, 11}));
    EXPECT_EQ(r.objective_value, tables.mem(0, 18));
}

TEST(MetDp, ReferenceDisjointRoot) {
    const auto r = solve_free(example_matrix(BoundaryMode::Disjoint));
    EXPECT_EQ(r.thresholds, (std::vector<Level>{4, 6, 8, 10, 12}));
    EXPECT_NEAR(r.objective_value, 1.775, 5e-4);
}

TEST(MetDp, EveryReferenceCellMatches) {
    const auto sm = example_matrix(BoundaryMode::Overlapping);
    const auto tables = fill_tables(sm, TableVariant::FullIndices);
    int checked = 0;
    for (const auto& cell : reference_overlapping_mem()) {
        if (cell.value == kReferenceInf) {
            EXPECT_FALSE(is_valid_score(tables.mem(cell.row, cell.col)));
        } else {
            EXPECT_NEAR(tables.mem(cell.row, cell.col), cell.value, 5e-4);
            EXPECT_EQ(tables.split(cell.row, cell.col), cell.split) << cell.row << "," << cell.col;
        }
        ++checked;
    }
    EXPECT_EQ(checked, 171);
}

TEST(MetDp, LinksVariantHasNoSplitTable) {
    const auto tables = fill_tables(example_matrix(BoundaryMode::Overlapping));
    EXPECT_THROW((void)tables.split(0, 18), InputError);
    EXPECT_EQ(tables.next(0), 5);
    EXPECT_EQ(tables.next(5), 11);
    EXPECT_EQ(tables.next(11), 18);
}

TEST(MetDp, RejectsMaximizingObjectives) {
    const auto sm = build_score_matrix(example_histogram(), ObjectiveKind::Otsu, BoundaryMode::Disjoint);
    EXPECT_THROW(fill_tables(sm), InputError);
    EXPECT_THROW(solve_free(sm), InputError);
}

TEST(MetDp, InfeasibleOnSingleLevelHistogram) {
    std::vector<std::uint64_t> c(12, 0);
    c[6] = 9;
    const auto sm = build_score_matrix(GrayHistogram(c), ObjectiveKind::Met, BoundaryMode::Overlapping);
    EXPECT_THROW(solve_free(sm), InfeasibleError);
}

TEST(MetDp, TwoLevelHistogram) {
    const auto sm = build_score_matrix(GrayHistogram(std::vector<std::uint64_t>{3, 5}), ObjectiveKind::Met,
                                       BoundaryMode::Overlapping);
    const auto r = solve_free(sm);
    EXPECT_TRUE(r.thresholds.empty());
    EXPECT_EQ(r.objective_value, sm.closed(0, 1));
}

TEST(MetDp, FootprintGrowsQuadratically) {
    std::mt19937_64 rng(1);
    const auto tables_for = [&](int levels, TableVariant variant) {
        return fill_tables(build_score_matrix(oracle::random_histogram(rng, levels, 0, 10), ObjectiveKind::Met,
                                              BoundaryMode::Overlapping),
                           variant);
    };
    const auto small = tables_for(64, TableVariant::Links);
    const auto large = tables_for(128, TableVariant::Links);
    const auto full = tables_for(64, TableVariant::FullIndices);
    EXPECT_EQ(small.footprint_bytes(), 64u * 64u * sizeof(double) + 64u * sizeof(Level));
    EXPECT_NEAR(static_cast<double>(large.footprint_bytes()) / static_cast<double>(small.footprint_bytes()), 4.0,
                0.1);
    EXPECT_EQ(full.footprint_bytes(), 64u * 64u * (sizeof(double) + sizeof(Level)));
}

TEST(MetDpProperty, MatchesExhaustiveMinimum) {
    std::mt19937_64 rng(41);
    int compared = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const int levels = 2 + static_cast<int>(rng() % 15);
        const auto h = oracle::random_histogram(rng, levels, trial % 2 ? 0.5 : 0.1, trial % 3 ? 50 : 2);
        if (h.total() == 0) continue;
        for (auto mode : {BoundaryMode::Overlapping, BoundaryMode::Disjoint}) {
            const auto sm = build_score_matrix(h, ObjectiveKind::Met, mode);
            const auto expected = oracle::exhaustive_free(sm);
            for (auto variant : {TableVariant::Links, TableVariant::FullIndices}) {
                if (!expected) {
                    EXPECT_THROW(solve_free(sm, variant), InfeasibleError);
                    continue;
                }
                const auto got = solve_free(sm, variant);
                EXPECT_EQ(got.objective_value, expected->value) << "L=" << levels;
                EXPECT_EQ(got.thresholds, expected->thresholds) << "L=" << levels;
                EXPECT_EQ(chain_from_top(sm, got.thresholds), expected->value);
                EXPECT_NO_THROW(validate_thresholds(got.thresholds, levels));
                ++compared;
            }
        }
    }
    EXPECT_GT(compared, 200);
}

TEST(MetDpProperty, VariantsAgree) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const int levels = 2 + static_cast<int>(rng() % 120);
        const auto h = oracle::random_histogram(rng, levels, 0.3, 300);
        const auto sm = build_score_matrix(h, ObjectiveKind::Met, trial % 2 ? BoundaryMode::Overlapping
                                                                             : BoundaryMode::Disjoint);
        const auto a = fill_tables(sm, TableVariant::Links);
        const auto b = fill_tables(sm, TableVariant::FullIndices);
        for (Level i = 0; i < levels; ++i) {
            for (Level j = i; j < levels; ++j) EXPECT_EQ(a.mem(i, j), b.mem(i, j));
            EXPECT_EQ(a.next(i), b.next(i));
        }
        if (is_valid_score(a.mem(0, levels - 1))) { EXPECT_EQ(backtrack(a), backtrack(b)); }
    }
}

TEST(MetDpProperty, ParallelFillIsBitIdentical) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const int levels = 16 + static_cast<int>(rng() % 200);
        const auto sm = build_score_matrix(oracle::random_histogram(rng, levels, 0.2, 1000), ObjectiveKind::Met,
                                           BoundaryMode::Overlapping);
        const auto seq = fill_tables(sm, TableVariant::FullIndices, Execution::Sequential);
        for (unsigned workers : {1u, 3u, 4u}) {
            const auto par = fill_tables(sm, TableVariant::FullIndices, Execution::Parallel, workers);
            for (Level i = 0; i < levels; ++i) {
                for (Level j = i; j < levels; ++j) {
                    ASSERT_EQ(seq.mem(i, j), par.mem(i, j));
                    ASSERT_EQ(seq.split(i, j), par.split(i, j));
                }
            }
        }
    }
}

// Each finite cell is the minimum over keeping [i, j] whole and every split,
// and no finite cell appears without a finite witness.
TEST(MetDpProperty, BellmanEquationHolds) {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        const int levels = 2 + static_cast<int>(rng() % 60);
        const auto h = oracle::random_histogram(rng, levels, 0.3, 100);
        for (auto mode : {BoundaryMode::Overlapping, BoundaryMode::Disjoint}) {
            const auto sm = build_score_matrix(h, ObjectiveKind::Met, mode);
            const auto t = fill_tables(sm, TableVariant::FullIndices);
            for (Level i = 0; i < levels; ++i) {
                for (Level j = i + 1; j < levels; ++j) {
                    double best = sm.closed(i, j);
                    for (Level k = i + 1; k < j; ++k) {
                        const double v = sm.region(i, k) + t.mem(k, j);
                        if (v < best) best = v;
                    }
                    EXPECT_EQ(t.mem(i, j), best);
                    const Level k = t.split(i, j);
                    if (is_valid_score(best) && k != j) { EXPECT_EQ(sm.region(i, k) + t.mem(k, j), best); }
                }
            }
        }
    }
}

TEST(MetDpProperty, BacktrackAlwaysRecoversTheRootValue) {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 40; ++trial) {
        const int levels = 3 + static_cast<int>(rng() % 254);
        const auto h = oracle::random_histogram(rng, levels, 0.25, 4000);
        const auto sm = build_score_matrix(h, ObjectiveKind::Met, BoundaryMode::Overlapping);
        const auto tables = fill_tables(sm);
        if (!is_valid_score(tables.mem(0, levels - 1))) continue;
        const auto r = backtrack(tables);
        EXPECT_EQ(chain_from_top(sm, r.thresholds), tables.mem(0, levels - 1));
    }
}

}  // namespace
}  // namespace metdp
