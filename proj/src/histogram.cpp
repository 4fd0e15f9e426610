#include "metdp/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "metdp/errors.hpp"

namespace metdp {

GrayHistogram::GrayHistogram(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
    if (counts_.size() < 2) {
        throw InputError("histogram needs at least 2 levels, got " + std::to_string(counts_.size()));
    }
    total_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

GrayHistogram build_histogram(const GrayImage& image, int levels) {
    if (levels < 2) {
        throw InputError("histogram needs at least 2 levels, got " + std::to_string(levels));
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(levels), 0);
    for (const auto v : image.pixels()) {
        if (v >= levels) {
            throw InputError("pixel value " + std::to_string(v) + " is outside [0, " +
                             std::to_string(levels - 1) + "]");
        }
        ++counts[v];
    }
    return GrayHistogram(std::move(counts));
}

NormalizedHistogram normalize(const GrayHistogram& h) {
    if (h.total() == 0) {
        throw EmptyHistogramError("cannot normalize a histogram with no pixels");
    }
    NormalizedHistogram p;
    p.probs.reserve(h.counts().size());
    const auto total = static_cast<double>(h.total());
    for (const auto c : h.counts()) {
        p.probs.push_back(static_cast<double>(c) / total);
    }
    return p;
}

PrefixMoments prefix_moments(const GrayHistogram& h) {
    const auto n = h.counts().size();
    PrefixMoments m;
    m.cum0.resize(n);
    m.cum1.resize(n);
    m.cum2.resize(n);
    std::int64_t s0 = 0, s1 = 0, s2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<std::int64_t>(h.counts()[i]);
        const auto level = static_cast<std::int64_t>(i);
        s0 += c;
        s1 += level * c;
        s2 += level * level * c;
        m.cum0[i] = s0;
        m.cum1[i] = s1;
        m.cum2[i] = s2;
    }
    return m;
}

IntervalStats interval_stats(const PrefixMoments& m, std::int64_t total, Level a, Level b) {
    if (a < 0 || a > b || b >= m.levels()) {
        throw IntervalError("invalid interval [" + std::to_string(a) + ", " + std::to_string(b) +
                            "] for " + std::to_string(m.levels()) + " levels");
    }
    const auto hi = static_cast<std::size_t>(b);
    const auto lo = static_cast<std::size_t>(a);
    const auto before = [&](const std::vector<std::int64_t>& cum) {
        return a == 0 ? std::int64_t{0} : cum[lo - 1];
    };

    IntervalStats s;
    s.pixel_count = m.cum0[hi] - before(m.cum0);
    if (s.pixel_count == 0) {
        return s;
    }
    const auto count = static_cast<double>(s.pixel_count);
    s.weight = total > 0 ? count / static_cast<double>(total) : 0.0;
    s.mean = static_cast<double>(m.cum1[hi] - before(m.cum1)) / count;
    const double second = static_cast<double>(m.cum2[hi] - before(m.cum2)) / count;
    // Algebraically non-negative; only rounding can push it below zero.
    s.variance = std::max(0.0, second - s.mean * s.mean);
    s.stddev = std::sqrt(s.variance);
    return s;
}

}  // namespace metdp
