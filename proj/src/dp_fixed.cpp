#include "metdp/dp_fixed.hpp"

#include <algorithm>
#include <string>

#include "metdp/errors.hpp"

namespace metdp {

FixedNTables fill_fixed_n_tables(const ScoreMatrix& sm, int n) {
    const int levels = sm.levels();
    if (n < 1 || n > levels - 2) {
        throw InputError("threshold count " + std::to_string(n) + " is outside [1, " +
                         std::to_string(levels - 2) + "]");
    }
    const Sense sense = sm.sense();
    FixedNTables t;
    t.thresholds = n;
    t.levels = levels;
    t.sense = sense;
    const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(levels);
    t.dp.assign(cells, invalid_score(sense));
    t.next.assign(cells, -1);

    const auto at = [levels](int layer, Level j) {
        return static_cast<std::size_t>(layer) * static_cast<std::size_t>(levels) +
               static_cast<std::size_t>(j);
    };

    for (Level j = 1; j <= levels - 1 - n; ++j) {
        t.dp[at(0, j)] = sm.region(0, j);
    }
    for (int i = 1; i < n; ++i) {
        for (Level j = i + 1; j <= levels - 1 - n + i; ++j) {
            double best = invalid_score(sense);
            Level arg = -1;
            for (Level k = j - 1; k >= i; --k) {
                const double prev = t.dp[at(i - 1, k)];
                const double q = sm.region(k, j);
                if (!is_valid_score(prev) || !is_valid_score(q)) {
                    continue;
                }
                const double candidate = prev + q;
                if (improves(sense, candidate, best)) {
                    best = candidate;
                    arg = k;
                }
            }
            t.dp[at(i, j)] = best;
            t.next[at(i, j)] = arg;
        }
    }
    return t;
}

ThresholdSet solve_fixed_n(const ScoreMatrix& sm, int n) {
    const auto t = fill_fixed_n_tables(sm, n);
    const int levels = sm.levels();
    const Sense sense = sm.sense();

    double best = invalid_score(sense);
    Level last = -1;
    for (Level j = n; j <= levels - 2; ++j) {
        const double partial = t.value(n - 1, j);
        const double tail = sm.last_region(j);
        if (!is_valid_score(partial) || !is_valid_score(tail)) {
            continue;
        }
        const double candidate = partial + tail;
        if (improves(sense, candidate, best)) {
            best = candidate;
            last = j;
        }
    }
    if (last < 0) {
        throw InfeasibleError("no partition into " + std::to_string(n + 1) +
                              " regions has a finite " + std::string(to_string(sm.kind())) +
                              " objective");
    }

    ThresholdSet result;
    result.objective_value = best;
    result.thresholds.reserve(static_cast<std::size_t>(n));
    Level level = last;
    result.thresholds.push_back(level);
    for (int layer = n - 1; layer >= 1; --layer) {
        level = t.predecessor(layer, level);
        if (level < 0) {
            throw ConsistencyError("fixed-n backtracking hit an unset link at layer " +
                                   std::to_string(layer));
        }
        result.thresholds.push_back(level);
    }
    std::reverse(result.thresholds.begin(), result.thresholds.end());
    return result;
}

std::vector<SweepPoint> sweep_optimal_values(const GrayHistogram& h, ObjectiveKind kind,
                                             BoundaryMode mode, int n_max) {
    if (n_max < 1 || n_max > h.levels() - 2) {
        throw InputError("n_max " + std::to_string(n_max) + " is outside [1, " +
                         std::to_string(h.levels() - 2) + "]");
    }
    const auto sm = build_score_matrix(h, kind, mode);
    std::vector<SweepPoint> points;
    points.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        points.push_back({n, solve_fixed_n(sm, n)});
    }
    return points;
}

}  // namespace metdp
