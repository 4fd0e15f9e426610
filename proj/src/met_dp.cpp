#include "metdp/met_dp.hpp"

#include <algorithm>
#include <barrier>
#include <string>
#include <thread>

#include "metdp/errors.hpp"
#include "metdp/parallel.hpp"

namespace metdp {

MetDpTables::MetDpTables(int levels, TableVariant variant)
    : levels_(levels), variant_(variant) {
    const auto n = static_cast<std::size_t>(levels);
    mem_.assign(n * n, invalid_score(Sense::Minimize));
    if (variant == TableVariant::Links) {
        links_.assign(n, -1);
    } else {
        indices_.assign(n * n, -1);
    }
}

Level MetDpTables::split(Level i, Level j) const {
    if (variant_ != TableVariant::FullIndices) {
        throw InputError("per-interval splits are only kept in the full-indices variant");
    }
    return indices_[cell(i, j)];
}

Level MetDpTables::next(Level i) const {
    if (variant_ == TableVariant::Links) {
        return links_[static_cast<std::size_t>(i)];
    }
    return i == levels_ - 1 ? -1 : indices_[cell(i, levels_ - 1)];
}

std::size_t MetDpTables::footprint_bytes() const noexcept {
    return mem_.size() * sizeof(double) + links_.size() * sizeof(Level) +
           indices_.size() * sizeof(Level);
}

MetDpTables fill_tables(const ScoreMatrix& sm, TableVariant variant, Execution execution,
                        unsigned workers) {
    if (sm.sense() != Sense::Minimize) {
        throw InputError("the free-count solver needs a minimized objective, got " +
                         std::string(to_string(sm.kind())));
    }
    const int levels = sm.levels();
    MetDpTables t(levels, variant);
    double* const mem = t.mem_.data();
    const auto stride = static_cast<std::size_t>(levels);

    const auto fill_cell = [&](Level i, Level j) {
        const auto row = sm.region_row(i);
        const double* column = mem + static_cast<std::size_t>(j) * stride;
        double best = sm.closed(i, j);
        Level arg = j;
        for (Level k = i + 1; k < j; ++k) {
            const double q = row[k];
            const double rest = column[k];
            if (!is_valid_score(q) || !is_valid_score(rest)) {
                continue;
            }
            const double candidate = q + rest;
            if (candidate < best) {
                best = candidate;
                arg = k;
            }
        }
        mem[static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(i)] = best;
        if (variant == TableVariant::FullIndices) {
            t.indices_[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)] = arg;
        } else if (j == levels - 1) {
            t.links_[static_cast<std::size_t>(i)] = arg;
        }
    };

    unsigned threads = execution == Execution::Parallel ? (workers ? workers : worker_count()) : 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(levels));
    if (threads <= 1) {
        for (Level i = levels - 1; i >= 0; --i) {
            for (Level j = i + 1; j < levels; ++j) {
                fill_cell(i, j);
            }
        }
        return t;
    }

    // Row i only reads rows below it, so the cells of one row are independent.
    // Workers take columns round-robin and meet at a barrier after each row.
    std::barrier sync(static_cast<std::ptrdiff_t>(threads));
    const auto work = [&](unsigned w) {
        for (Level i = levels - 1; i >= 0; --i) {
            for (Level j = i + 1 + static_cast<Level>(w); j < levels;
                 j += static_cast<Level>(threads)) {
                fill_cell(i, j);
            }
            sync.arrive_and_wait();
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads - 1);
        for (unsigned w = 1; w < threads; ++w) {
            pool.emplace_back(work, w);
        }
        work(0);
    }
    return t;
}

ThresholdSet backtrack(const MetDpTables& tables) {
    const Level last = tables.levels() - 1;
    ThresholdSet result;
    result.objective_value = tables.mem(0, last);
    Level t = 0;
    while (t != last) {
        const Level following = tables.next(t);
        if (following <= t || following > last) {
            throw ConsistencyError("successor chain broken at level " + std::to_string(t) +
                                   " (link " + std::to_string(following) + ")");
        }
        if (following != last) {
            result.thresholds.push_back(following);
        }
        t = following;
    }
    return result;
}

ThresholdSet solve_free(const ScoreMatrix& sm, TableVariant variant, Execution execution) {
    const auto tables = fill_tables(sm, variant, execution);
    if (!is_valid_score(tables.mem(0, sm.levels() - 1))) {
        throw InfeasibleError("every cut of the histogram contains a degenerate region");
    }
    return backtrack(tables);
}

}  // namespace metdp
