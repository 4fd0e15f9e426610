#include <gtest/gtest.h>

#include <random>

#include "metdp/errors.hpp"
#include "metdp/quantize.hpp"
#include "metdp/worked_example.hpp"

namespace metdp {
namespace {

// An image whose histogram is `h`, pixels laid out level by level.
GrayImage image_of(const GrayHistogram& h, std::size_t width) {
    std::vector<std::uint8_t> px;
    for (Level v = 0; v < h.levels(); ++v) px.insert(px.end(), h[v], static_cast<std::uint8_t>(v));
    const std::size_t height = (px.size() + width - 1) / width;
    px.resize(width * height, px.back());
    return GrayImage(width, height, std::move(px));
}

GrayImage random_image(std::mt19937_64& rng, std::size_t w, std::size_t h) {
    std::vector<std::uint8_t> px(w * h);
    for (auto& p : px) p = static_cast<std::uint8_t>(rng() & 0xff);
    return GrayImage(w, h, std::move(px));
}

TEST(RegionMap, ReferenceThresholds) {
    const std::vector<Level> t{5, 11};
    const auto regions = region_map(example_histogram(), t);
    ASSERT_EQ(regions.size(), 3u);
    EXPECT_EQ(regions[0], (Region{0, 4, 3}));
    EXPECT_EQ(regions[1], (Region{5, 10, 8}));
    EXPECT_EQ(regions[2], (Region{11, 18, 15}));
}

TEST(RegionMap, EmptyRegionUsesMidpoint) {
    const GrayHistogram h(std::vector<std::uint64_t>{4, 0, 0, 0, 0, 0, 0, 4});
    const std::vector<Level> t{2, 6};
    const auto regions = region_map(h, t);
    EXPECT_EQ(regions[1], (Region{2, 5, 4}));
}

TEST(RegionMap, RoundsHalfUp) {
    const GrayHistogram h(std::vector<std::uint64_t>{1, 0, 0, 1, 0});
    EXPECT_EQ(region_map(h, std::vector<Level>{}).front().level, 2);  // mean 1.5
}

TEST(ApplyThresholds, NoThresholdsGivesGlobalMean) {
    const GrayImage img(4, 1, std::vector<std::uint8_t>{10, 20, 30, 41});
    const auto q = apply_thresholds(img, std::vector<Level>{});
    for (auto p : q.pixels.pixels()) EXPECT_EQ(p, 25);
}

TEST(ApplyThresholds, TwoLevelImageIsUnchanged) {
    const GrayImage img(2, 2, std::vector<std::uint8_t>{0, 255, 255, 0});
    EXPECT_EQ(apply_thresholds(img, std::vector<Level>{128}).pixels, img);
}

TEST(ApplyThresholds, ReferenceImageMapsToThreeLevels) {
    const auto img = image_of(example_histogram(), 13);  // 78 = 13 x 6
    ASSERT_EQ(img.size(), 78u);
    const auto q = apply_thresholds(img, std::vector<Level>{5, 11}, 19);
    for (std::size_t i = 0; i < img.size(); ++i) {
        const int v = img.pixels()[i];
        EXPECT_EQ(q.pixels.pixels()[i], v < 5 ? 3 : v < 11 ? 8 : 15);
    }
}

TEST(ApplyThresholds, Errors) {
    const GrayImage img(2, 1, std::vector<std::uint8_t>{3, 40});
    EXPECT_THROW(apply_thresholds(img, std::vector<Level>{10}, 19), InputError);
    const GrayImage ok(2, 1, std::vector<std::uint8_t>{3, 4});
    EXPECT_THROW(apply_thresholds(ok, std::vector<Level>{6, 6}, 19), InputError);
    EXPECT_THROW(apply_thresholds(ok, std::vector<Level>{0}, 19), InputError);
}

TEST(QuantizeProperty, ShapeMonotonicityAndIdempotence) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const auto img = random_image(rng, 1 + rng() % 40, 1 + rng() % 40);
        std::vector<Level> t;
        for (Level v = 1; v < 255; ++v)
            if (rng() % 20 == 0) t.push_back(v);
        const auto q = apply_thresholds(img, t);
        EXPECT_EQ(q.pixels.width(), img.width());
        EXPECT_EQ(q.pixels.height(), img.height());
        EXPECT_EQ(q.regions.size(), t.size() + 1);

        // Input order is preserved and each output stays inside its region.
        for (std::size_t i = 0; i < img.size(); ++i) {
            for (std::size_t j = 0; j < img.size(); j += 7) {
                if (img.pixels()[i] <= img.pixels()[j]) { EXPECT_LE(q.pixels.pixels()[i], q.pixels.pixels()[j]); }
            }
        }
        for (const auto& r : q.regions) {
            EXPECT_GE(r.level, r.lo);
            EXPECT_LE(r.level, r.hi);
        }

        // Every output level sits in its own region, so requantizing is a no-op.
        EXPECT_EQ(apply_thresholds(q.pixels, t).pixels, q.pixels);
    }
}

}  // namespace
}  // namespace metdp
