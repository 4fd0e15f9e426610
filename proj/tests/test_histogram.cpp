#include <gtest/gtest.h>

#include <random>

#include "metdp/errors.hpp"
#include "metdp/histogram.hpp"
#include "metdp/worked_example.hpp"
#include "oracles.hpp"

namespace metdp {
namespace {

TEST(BuildHistogram, SinglePixel) {
    const GrayImage img(1, 1, std::vector<std::uint8_t>{7});
    const auto h = build_histogram(img, 19);
    EXPECT_EQ(h.total(), 1u);
    for (Level i = 0; i < 19; ++i) EXPECT_EQ(h[i], i == 7 ? 1u : 0u);
}

TEST(BuildHistogram, AllZeroImage) {
    const auto h = build_histogram(GrayImage(2, 2, 0), 256);
    EXPECT_EQ(h.levels(), 256);
    EXPECT_EQ(h[0], 4u);
    EXPECT_EQ(h.total(), 4u);
}

TEST(BuildHistogram, ReferenceTotal) { EXPECT_EQ(example_histogram().total(), 78u); }

TEST(BuildHistogram, PixelOutOfRangeNamesValue) {
    const GrayImage img(2, 1, std::vector<std::uint8_t>{3, 200});
    try {
        build_histogram(img, 19);
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("200"), std::string::npos);
    }
}

TEST(GrayHistogram, RejectsSingleLevel) {
    EXPECT_THROW(GrayHistogram(std::vector<std::uint64_t>{5}), InputError);
}

TEST(Normalize, ReferenceProbability) {
    const auto p = normalize(example_histogram());
    EXPECT_DOUBLE_EQ(p.probs[3], 10.0 / 78.0);
}

TEST(Normalize, UniformAndScaled) {
    const GrayHistogram h(std::vector<std::uint64_t>(8, 3));
    for (double v : normalize(h).probs) EXPECT_DOUBLE_EQ(v, 1.0 / 8.0);

    const auto base = example_histogram();
    std::vector<std::uint64_t> scaled;
    for (auto c : base.counts()) scaled.push_back(5 * c);
    EXPECT_EQ(normalize(GrayHistogram(scaled)).probs, normalize(base).probs);
}

TEST(Normalize, EmptyHistogram) {
    EXPECT_THROW(normalize(GrayHistogram(std::vector<std::uint64_t>(4, 0))), EmptyHistogramError);
}

TEST(PrefixMoments, ReferenceRows) {
    const auto m = prefix_moments(example_histogram());
    EXPECT_EQ(m.cum0[6], 27);
    EXPECT_EQ(m.cum1[6], 89);
    EXPECT_EQ(m.cum2[6], 327);
    EXPECT_EQ(m.cum2[18], 8464);
    EXPECT_EQ(m.cum0[18], 78);
}

TEST(PrefixMoments, AllZero) {
    const auto m = prefix_moments(GrayHistogram(std::vector<std::uint64_t>(5, 0)));
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(m.cum0[i], 0);
        EXPECT_EQ(m.cum1[i], 0);
        EXPECT_EQ(m.cum2[i], 0);
    }
}

TEST(PrefixMoments, WideEnoughForMegapixelSaturation) {
    // 2^20 pixels all at level 255.
    std::vector<std::uint64_t> counts(256, 0);
    counts[255] = 1u << 20;
    const auto m = prefix_moments(GrayHistogram(counts));
    EXPECT_EQ(m.cum2[255], std::int64_t{255} * 255 * (1 << 20));
}

TEST(IntervalStats, ReferenceInterval) {
    const auto m = prefix_moments(example_histogram());
    const auto s = interval_stats(m, 5, 6);
    EXPECT_EQ(s.pixel_count, 3);
    EXPECT_DOUBLE_EQ(s.weight, 3.0 / 78.0);
    EXPECT_NEAR(s.mean, 17.0 / 3.0, 1e-12);
    EXPECT_NEAR(s.variance, 2.0 / 9.0, 1e-12);
    EXPECT_NEAR(s.stddev, std::sqrt(2.0 / 9.0), 1e-12);
}

TEST(IntervalStats, FullIntervalIsGlobal) {
    const auto m = prefix_moments(example_histogram());
    const auto s = interval_stats(m, 0, 18);
    EXPECT_DOUBLE_EQ(s.weight, 1.0);
    EXPECT_DOUBLE_EQ(s.mean, 710.0 / 78.0);
}

TEST(IntervalStats, EmptyInterval) {
    const auto m = prefix_moments(example_histogram());
    const auto s = interval_stats(m, 0, 1);
    EXPECT_EQ(s.pixel_count, 0);
    EXPECT_EQ(s.weight, 0.0);
    EXPECT_EQ(s.mean, 0.0);
    EXPECT_EQ(s.variance, 0.0);
}

TEST(IntervalStats, DomainErrors) {
    const auto m = prefix_moments(example_histogram());
    EXPECT_THROW(interval_stats(m, 5, 4), IntervalError);
    EXPECT_THROW(interval_stats(m, 0, 19), IntervalError);
    EXPECT_THROW(interval_stats(m, -1, 3), IntervalError);
}

TEST(IntervalStatsProperty, MatchesDirectSummation) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int levels = 2 + static_cast<int>(rng() % 255);
        const auto h = oracle::random_histogram(rng, levels, 0.3, 5000);
        if (h.total() == 0) continue;
        const auto m = prefix_moments(h);
        const auto counts = oracle::counts_of(h);
        for (int k = 0; k < 20; ++k) {
            int a = static_cast<int>(rng() % levels), b = static_cast<int>(rng() % levels);
            if (a > b) std::swap(a, b);
            const auto s = interval_stats(m, a, b);
            const auto o = oracle::direct_stats(counts, a, b);
            EXPECT_EQ(static_cast<double>(s.pixel_count), o.pixels);
            EXPECT_NEAR(s.weight, o.weight, 1e-9 * std::max(1.0, o.weight));
            EXPECT_NEAR(s.mean, o.mean, 1e-9 * std::max(1.0, o.mean));
            EXPECT_NEAR(s.variance, o.variance, 1e-9 * std::max(1.0, o.variance));
        }
    }
}

TEST(IntervalStatsProperty, AdditivityAndMixture) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int levels = 3 + static_cast<int>(rng() % 254);
        const auto h = oracle::random_histogram(rng, levels, 0.2, 1000);
        if (h.total() == 0) continue;
        const auto m = prefix_moments(h);
        const int a = static_cast<int>(rng() % (levels - 2));
        const int b = a + 2 + static_cast<int>(rng() % (levels - a - 2));
        const int mid = a + 1 + static_cast<int>(rng() % (b - a - 1));
        const auto lo = interval_stats(m, a, mid), hi = interval_stats(m, mid + 1, b),
                   all = interval_stats(m, a, b);
        EXPECT_EQ(lo.pixel_count + hi.pixel_count, all.pixel_count);
        EXPECT_NEAR(lo.weight * lo.mean + hi.weight * hi.mean, all.weight * all.mean, 1e-9 * levels);
    }
}

TEST(IntervalStatsProperty, ScaleInvarianceIsBitExact) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int levels = 2 + static_cast<int>(rng() % 255);
        const auto h = oracle::random_histogram(rng, levels, 0.3, 3000);
        if (h.total() == 0) continue;
        const std::uint64_t factor = 1 + rng() % 50;
        std::vector<std::uint64_t> scaled;
        for (auto c : h.counts()) scaled.push_back(c * factor);
        const auto m1 = prefix_moments(h), m2 = prefix_moments(GrayHistogram(scaled));
        for (int k = 0; k < 10; ++k) {
            int a = static_cast<int>(rng() % levels), b = static_cast<int>(rng() % levels);
            if (a > b) std::swap(a, b);
            const auto s1 = interval_stats(m1, a, b), s2 = interval_stats(m2, a, b);
            EXPECT_EQ(s1.weight, s2.weight);
            EXPECT_EQ(s1.mean, s2.mean);
            EXPECT_EQ(s1.variance, s2.variance);
        }
    }
}

}  // namespace
}  // namespace metdp
