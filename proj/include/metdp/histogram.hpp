#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "metdp/image.hpp"

namespace metdp {

/// Intensity level index in [0, L-1].
using Level = int;

/// Pixel counts per intensity level.
class GrayHistogram {
public:
    /// Throws InputError when fewer than two levels are given.
    explicit GrayHistogram(std::vector<std::uint64_t> counts);

    int levels() const noexcept { return static_cast<int>(counts_.size()); }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t operator[](Level i) const { return counts_[static_cast<std::size_t>(i)]; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }

    friend bool operator==(const GrayHistogram&, const GrayHistogram&) = default;

private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

struct NormalizedHistogram {
    std::vector<double> probs;
};

/// Cumulative zeroth, first and second moments of a histogram, kept as exact
/// integers. cum0[i] = sum_{j<=i} h(j), cum1[i] = sum j*h(j), cum2[i] = sum j^2*h(j).
struct PrefixMoments {
    std::vector<std::int64_t> cum0;
    std::vector<std::int64_t> cum1;
    std::vector<std::int64_t> cum2;

    int levels() const noexcept { return static_cast<int>(cum0.size()); }
    std::int64_t total() const noexcept { return cum0.empty() ? 0 : cum0.back(); }
};

/// Statistics of the pixels whose level lies in a closed interval [a, b].
/// For an empty interval every field is zero.
struct IntervalStats {
    std::int64_t pixel_count = 0;
    double weight = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double stddev = 0.0;
};

/// Throws InputError naming the offending value if any pixel is >= levels.
GrayHistogram build_histogram(const GrayImage& image, int levels = 256);

/// Throws EmptyHistogramError when the histogram has no pixels.
NormalizedHistogram normalize(const GrayHistogram& h);

PrefixMoments prefix_moments(const GrayHistogram& h);

/// Weight is taken relative to `total` pixels. Throws IntervalError unless
/// 0 <= a <= b <= L-1.
IntervalStats interval_stats(const PrefixMoments& m, std::int64_t total, Level a, Level b);

inline IntervalStats interval_stats(const PrefixMoments& m, Level a, Level b) {
    return interval_stats(m, m.total(), a, b);
}

}  // namespace metdp
