#pragma once

#include <vector>

#include "metdp/objectives.hpp"

namespace metdp {

/// Layered tables of the fixed-count solver. Layer i holds the best partial
/// objective when the (i+1)-th threshold sits at level j, and the level of the
/// i-th threshold that achieved it.
struct FixedNTables {
    int thresholds = 0;
    int levels = 0;
    Sense sense = Sense::Minimize;
    std::vector<double> dp;
    std::vector<Level> next;

    double value(int layer, Level j) const { return dp[index(layer, j)]; }
    Level predecessor(int layer, Level j) const { return next[index(layer, j)]; }

private:
    std::size_t index(int layer, Level j) const {
        return static_cast<std::size_t>(layer) * static_cast<std::size_t>(levels) +
               static_cast<std::size_t>(j);
    }
};

/// Fills the layered tables for exactly n thresholds. Threshold i+1 only
/// visits levels [i+1, L-1-n+i], which always leaves room for the rest.
/// Throws InputError unless 1 <= n <= L-2.
FixedNTables fill_fixed_n_tables(const ScoreMatrix& sm, int n);

/// Optimal set of exactly n thresholds under the matrix's objective and
/// boundary mode.
///
/// Ties keep the first optimum met: the last threshold is the smallest level
/// reaching the optimum, and each earlier threshold is the largest level that
/// reaches the best value for the threshold after it.
///
/// Throws InputError for n outside [1, L-2] and InfeasibleError when every
/// partition contains a degenerate region.
ThresholdSet solve_fixed_n(const ScoreMatrix& sm, int n);

struct SweepPoint {
    int n = 0;
    ThresholdSet result;
};

/// Optimal values for n = 1..n_max on a single score matrix.
std::vector<SweepPoint> sweep_optimal_values(const GrayHistogram& h, ObjectiveKind kind,
                                             BoundaryMode mode, int n_max);

}  // namespace metdp
