#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metdp/histogram.hpp"

namespace metdp {

/// Region cost criteria. Otsu and Kapur are maximized, Kittler and MET minimized.
enum class ObjectiveKind { Otsu, Kapur, Kittler, Met };

/// How a threshold level is attributed when scoring adjacent regions.
///  - Disjoint: region i covers [T_{i-1}, T_i - 1].
///  - Overlapping: region i covers [T_{i-1}, T_i]; level T_i is counted in the
///    statistics of both neighbours.
enum class BoundaryMode { Disjoint, Overlapping };

enum class Sense { Minimize, Maximize };

enum class LogBase { Two, Natural };

Sense sense_of(ObjectiveKind kind) noexcept;
std::string_view to_string(ObjectiveKind kind) noexcept;
std::string_view to_string(BoundaryMode mode) noexcept;
/// Throws InputError on unknown names.
ObjectiveKind parse_objective(std::string_view name);
BoundaryMode parse_mode(std::string_view name);

/// The degenerate-region marker: +inf when minimizing, -inf when maximizing.
constexpr double invalid_score(Sense sense) noexcept {
    return sense == Sense::Minimize ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
}

inline bool is_valid_score(double q) noexcept { return std::isfinite(q); }

/// true when `candidate` strictly improves on `incumbent` under `sense`.
inline bool improves(Sense sense, double candidate, double incumbent) noexcept {
    return sense == Sense::Minimize ? candidate < incumbent : candidate > incumbent;
}

/// Interior thresholds 0 < T_1 < ... < T_n < L-1 and the objective they reach.
struct ThresholdSet {
    std::vector<Level> thresholds;
    double objective_value = 0.0;

    std::size_t count() const noexcept { return thresholds.size(); }
    friend bool operator==(const ThresholdSet&, const ThresholdSet&) = default;
};

/// Throws InputError unless the levels are strictly increasing and interior.
void validate_thresholds(std::span<const Level> thresholds, int levels);

// Single-region costs over the closed interval [a, b]. Each throws
// IntervalError on a malformed interval.

/// w * (mu - global_mean)^2; zero for an empty region.
double q_otsu(const PrefixMoments& m, Level a, Level b, double global_mean);

/// Entropy of the region's normalized distribution, log w - sum(p log p) / w.
/// Zero for an empty region.
double q_kapur(const GrayHistogram& h, Level a, Level b, LogBase base = LogBase::Two);

/// w * (log sigma - log w); +inf when w == 0 or sigma == 0.
double q_kittler(const PrefixMoments& m, std::int64_t total, Level a, Level b,
                 LogBase base = LogBase::Two);

/// Same formula as q_kittler. The modified criterion differs only in the
/// intervals a solver feeds it (BoundaryMode::Overlapping).
double q_met(const PrefixMoments& m, std::int64_t total, Level a, Level b,
             LogBase base = LogBase::Two);

/// Dense table of closed-interval region costs Q[a][b] for 0 <= a <= b < L.
///
/// Solvers never index the table directly; they ask for the cost of a region
/// that starts at `a` and is followed by a region starting at `next`
/// (`region`), or for a region that runs to the last level (`closed`). The
/// boundary mode decides whether `next` itself belongs to the earlier region.
class ScoreMatrix {
public:
    ScoreMatrix(int levels, ObjectiveKind kind, BoundaryMode mode, std::vector<double> closed_costs);

    int levels() const noexcept { return levels_; }
    ObjectiveKind kind() const noexcept { return kind_; }
    BoundaryMode mode() const noexcept { return mode_; }
    Sense sense() const noexcept { return sense_of(kind_); }
    double invalid() const noexcept { return invalid_score(sense()); }

    /// Cost of the closed interval [a, b]; requires a <= b.
    double closed(Level a, Level b) const noexcept {
        return q_[static_cast<std::size_t>(a) * static_cast<std::size_t>(levels_) +
                  static_cast<std::size_t>(b)];
    }

    /// Cost of a region starting at `a` when the following region starts at
    /// `next` (a < next).
    double region(Level a, Level next) const noexcept {
        return closed(a, mode_ == BoundaryMode::Overlapping ? next : next - 1);
    }

    /// Row `a` of region costs indexed by the next region's start:
    /// `region_row(a)[next] == region(a, next)` for a < next < L.
    struct RegionRow {
        const double* costs;
        int shift;
        double operator[](Level next) const noexcept { return costs[next - shift]; }
    };
    RegionRow region_row(Level a) const noexcept {
        return {q_.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(levels_),
                mode_ == BoundaryMode::Overlapping ? 0 : 1};
    }

    double last_region(Level a) const noexcept { return closed(a, levels_ - 1); }

private:
    int levels_;
    ObjectiveKind kind_;
    BoundaryMode mode_;
    std::vector<double> q_;
};

/// O(L^2) given prefix moments.
ScoreMatrix build_score_matrix(const GrayHistogram& h, ObjectiveKind kind, BoundaryMode mode,
                               LogBase base = LogBase::Two);

/// Sum of region costs over the n+1 regions cut by `thresholds`, accumulated
/// from the lowest region upwards. Returns the invalid sentinel if any region
/// is degenerate. Throws InputError on a malformed threshold set.
double evaluate_thresholds(const ScoreMatrix& sm, std::span<const Level> thresholds);

/// Same as above but recomputes every region from the histogram instead of
/// reading a precomputed matrix.
double evaluate_thresholds(const GrayHistogram& h, ObjectiveKind kind, BoundaryMode mode,
                           std::span<const Level> thresholds, LogBase base = LogBase::Two);

}  // namespace metdp
