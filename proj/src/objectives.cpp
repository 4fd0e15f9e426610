#include "metdp/objectives.hpp"

#include <string>

#include "metdp/errors.hpp"

namespace metdp {
namespace {

double log_in(LogBase base, double x) { return base == LogBase::Two ? std::log2(x) : std::log(x); }

double h_log_h(std::uint64_t count, LogBase base) {
    return count == 0 ? 0.0 : static_cast<double>(count) * log_in(base, static_cast<double>(count));
}

// Kapur entropy written in counts: log w - sum(p log p)/w == log P - sum(h log h)/P.
// The count form needs no normalization and stays non-negative under rounding.
double kapur_from_sums(std::int64_t pixels, double sum_h_log_h, LogBase base) {
    if (pixels == 0) {
        return 0.0;
    }
    const auto p = static_cast<double>(pixels);
    return log_in(base, p) - sum_h_log_h / p;
}

double kittler_from_stats(const IntervalStats& s, LogBase base) {
    if (s.weight <= 0.0 || s.stddev <= 0.0) {
        return invalid_score(Sense::Minimize);
    }
    return s.weight * (log_in(base, s.stddev) - log_in(base, s.weight));
}

void check_interval(int levels, Level a, Level b) {
    if (a < 0 || a > b || b >= levels) {
        throw IntervalError("invalid interval [" + std::to_string(a) + ", " + std::to_string(b) +
                            "] for " + std::to_string(levels) + " levels");
    }
}

double global_mean(const PrefixMoments& m) {
    return m.total() == 0 ? 0.0
                          : static_cast<double>(m.cum1.back()) / static_cast<double>(m.total());
}

}  // namespace

Sense sense_of(ObjectiveKind kind) noexcept {
    switch (kind) {
        case ObjectiveKind::Otsu:
        case ObjectiveKind::Kapur:
            return Sense::Maximize;
        case ObjectiveKind::Kittler:
        case ObjectiveKind::Met:
            break;
    }
    return Sense::Minimize;
}

std::string_view to_string(ObjectiveKind kind) noexcept {
    switch (kind) {
        case ObjectiveKind::Otsu: return "otsu";
        case ObjectiveKind::Kapur: return "kapur";
        case ObjectiveKind::Kittler: return "kittler";
        case ObjectiveKind::Met: return "met";
    }
    return "?";
}

std::string_view to_string(BoundaryMode mode) noexcept {
    return mode == BoundaryMode::Disjoint ? "disjoint" : "overlapping";
}

ObjectiveKind parse_objective(std::string_view name) {
    for (auto kind : {ObjectiveKind::Otsu, ObjectiveKind::Kapur, ObjectiveKind::Kittler,
                      ObjectiveKind::Met}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    throw InputError("unknown objective '" + std::string(name) + "'");
}

BoundaryMode parse_mode(std::string_view name) {
    if (name == "disjoint") return BoundaryMode::Disjoint;
    if (name == "overlapping") return BoundaryMode::Overlapping;
    throw InputError("unknown boundary mode '" + std::string(name) + "'");
}

void validate_thresholds(std::span<const Level> thresholds, int levels) {
    Level previous = 0;
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        const Level t = thresholds[i];
        if (t <= previous || t >= levels - 1) {
            throw InputError("threshold " + std::to_string(t) + " at position " + std::to_string(i) +
                             " breaks 0 < T_1 < ... < T_n < " + std::to_string(levels - 1));
        }
        previous = t;
    }
}

double q_otsu(const PrefixMoments& m, Level a, Level b, double mean_all) {
    const auto s = interval_stats(m, a, b);
    if (s.pixel_count == 0) {
        return 0.0;
    }
    const double d = s.mean - mean_all;
    return s.weight * d * d;
}

double q_kapur(const GrayHistogram& h, Level a, Level b, LogBase base) {
    check_interval(h.levels(), a, b);
    std::int64_t pixels = 0;
    double sum = 0.0;
    for (Level i = a; i <= b; ++i) {
        pixels += static_cast<std::int64_t>(h[i]);
        sum += h_log_h(h[i], base);
    }
    return kapur_from_sums(pixels, sum, base);
}

double q_kittler(const PrefixMoments& m, std::int64_t total, Level a, Level b, LogBase base) {
    return kittler_from_stats(interval_stats(m, total, a, b), base);
}

double q_met(const PrefixMoments& m, std::int64_t total, Level a, Level b, LogBase base) {
    return q_kittler(m, total, a, b, base);
}

ScoreMatrix::ScoreMatrix(int levels, ObjectiveKind kind, BoundaryMode mode,
                         std::vector<double> closed_costs)
    : levels_(levels), kind_(kind), mode_(mode), q_(std::move(closed_costs)) {
    if (levels < 2) {
        throw InputError("score matrix needs at least 2 levels");
    }
    if (q_.size() != static_cast<std::size_t>(levels) * static_cast<std::size_t>(levels)) {
        throw InputError("score matrix storage does not match " + std::to_string(levels) + " levels");
    }
}

ScoreMatrix build_score_matrix(const GrayHistogram& h, ObjectiveKind kind, BoundaryMode mode,
                               LogBase base) {
    const int levels = h.levels();
    const auto n = static_cast<std::size_t>(levels);
    const auto m = prefix_moments(h);
    const auto total = m.total();
    const double mean_all = global_mean(m);
    std::vector<double> q(n * n, invalid_score(sense_of(kind)));

    std::vector<double> level_entropy;
    if (kind == ObjectiveKind::Kapur) {
        level_entropy.reserve(n);
        for (const auto c : h.counts()) {
            level_entropy.push_back(h_log_h(c, base));
        }
    }

    for (Level a = 0; a < levels; ++a) {
        double* row = q.data() + static_cast<std::size_t>(a) * n;
        std::int64_t pixels = 0;
        double entropy_sum = 0.0;
        for (Level b = a; b < levels; ++b) {
            switch (kind) {
                case ObjectiveKind::Otsu:
                    row[b] = q_otsu(m, a, b, mean_all);
                    break;
                case ObjectiveKind::Kapur:
                    pixels += static_cast<std::int64_t>(h[b]);
                    entropy_sum += level_entropy[static_cast<std::size_t>(b)];
                    row[b] = kapur_from_sums(pixels, entropy_sum, base);
                    break;
                case ObjectiveKind::Kittler:
                case ObjectiveKind::Met:
                    row[b] = q_kittler(m, total, a, b, base);
                    break;
            }
        }
    }
    return ScoreMatrix(levels, kind, mode, std::move(q));
}

double evaluate_thresholds(const ScoreMatrix& sm, std::span<const Level> thresholds) {
    validate_thresholds(thresholds, sm.levels());
    double sum = 0.0;
    Level start = 0;
    for (const Level t : thresholds) {
        const double q = sm.region(start, t);
        if (!is_valid_score(q)) {
            return sm.invalid();
        }
        sum += q;
        start = t;
    }
    const double last = sm.last_region(start);
    return is_valid_score(last) ? sum + last : sm.invalid();
}

double evaluate_thresholds(const GrayHistogram& h, ObjectiveKind kind, BoundaryMode mode,
                           std::span<const Level> thresholds, LogBase base) {
    const int levels = h.levels();
    validate_thresholds(thresholds, levels);
    const auto m = prefix_moments(h);
    const double mean_all = global_mean(m);
    const auto cost = [&](Level a, Level b) {
        switch (kind) {
            case ObjectiveKind::Otsu: return q_otsu(m, a, b, mean_all);
            case ObjectiveKind::Kapur: return q_kapur(h, a, b, base);
            case ObjectiveKind::Kittler:
            case ObjectiveKind::Met: break;
        }
        return q_kittler(m, m.total(), a, b, base);
    };

    double sum = 0.0;
    Level start = 0;
    for (const Level t : thresholds) {
        const double q = cost(start, mode == BoundaryMode::Overlapping ? t : t - 1);
        if (!is_valid_score(q)) {
            return invalid_score(sense_of(kind));
        }
        sum += q;
        start = t;
    }
    const double last = cost(start, levels - 1);
    return is_valid_score(last) ? sum + last : invalid_score(sense_of(kind));
}

}  // namespace metdp
