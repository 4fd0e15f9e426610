#pragma once

#include <span>
#include <vector>

#include "metdp/histogram.hpp"
#include "metdp/image.hpp"

namespace metdp {

/// One output class: every input level in [lo, hi] maps to `level`.
struct Region {
    Level lo = 0;
    Level hi = 0;
    Level level = 0;

    friend bool operator==(const Region&, const Region&) = default;
};

struct QuantizedImage {
    GrayImage pixels;
    std::vector<Region> regions;
};

/// Regions [T_{i-1}, T_i - 1] with T_0 = 0 and T_{n+1} = L; a threshold
/// level always opens the upper region. Each region's level is its mean
/// intensity rounded half up, or its midpoint (rounded half up) when empty.
/// Throws InputError on a malformed threshold set.
std::vector<Region> region_map(const GrayHistogram& h, std::span<const Level> thresholds);

/// Replaces each pixel with its region's level. Throws InputError when a
/// pixel is >= levels or the threshold set is malformed.
QuantizedImage apply_thresholds(const GrayImage& image, std::span<const Level> thresholds,
                                int levels = 256);

}  // namespace metdp
