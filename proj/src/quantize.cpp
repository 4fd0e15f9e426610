#include "metdp/quantize.hpp"

#include <array>

#include "metdp/errors.hpp"
#include "metdp/objectives.hpp"

namespace metdp {

std::vector<Region> region_map(const GrayHistogram& h, std::span<const Level> thresholds) {
    const int levels = h.levels();
    validate_thresholds(thresholds, levels);
    const auto m = prefix_moments(h);

    std::vector<Region> regions;
    regions.reserve(thresholds.size() + 1);
    Level lo = 0;
    for (std::size_t i = 0; i <= thresholds.size(); ++i) {
        const Level hi = i < thresholds.size() ? thresholds[i] - 1 : levels - 1;
        const std::int64_t below0 = lo == 0 ? 0 : m.cum0[static_cast<std::size_t>(lo - 1)];
        const std::int64_t below1 = lo == 0 ? 0 : m.cum1[static_cast<std::size_t>(lo - 1)];
        const std::int64_t pixels = m.cum0[static_cast<std::size_t>(hi)] - below0;
        const std::int64_t sum = m.cum1[static_cast<std::size_t>(hi)] - below1;
        // floor(sum / pixels + 1/2) in exact integer arithmetic.
        const Level level = pixels > 0 ? static_cast<Level>((2 * sum + pixels) / (2 * pixels))
                                       : (lo + hi + 1) / 2;
        regions.push_back({lo, hi, level});
        lo = hi + 1;
    }
    return regions;
}

QuantizedImage apply_thresholds(const GrayImage& image, std::span<const Level> thresholds,
                                int levels) {
    if (levels > 256) {
        throw InputError("8-bit images support at most 256 levels");
    }
    const auto h = build_histogram(image, levels);
    QuantizedImage out{image, region_map(h, thresholds)};

    std::array<std::uint8_t, 256> lut{};
    for (const auto& r : out.regions) {
        for (Level v = r.lo; v <= r.hi; ++v) {
            lut[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(r.level);
        }
    }
    for (auto& p : out.pixels.pixels()) {
        p = lut[p];
    }
    return out;
}

}  // namespace metdp
