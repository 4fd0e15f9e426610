#pragma once

#include <cstddef>
#include <vector>

#include "metdp/objectives.hpp"

namespace metdp {

/// Which successor record the free-count solver keeps.
///  - Links: one successor per start level (the split chosen for [i, L-1]),
///    Theta(L) extra memory.
///  - FullIndices: the split of every interval [i, j], Theta(L^2) extra memory.
enum class TableVariant { Links, FullIndices };

enum class Execution { Sequential, Parallel };

/// mem(i, j) is the best total cost of cutting [i, j] into one or more regions.
class MetDpTables {
public:
    MetDpTables(int levels, TableVariant variant);

    int levels() const noexcept { return levels_; }
    TableVariant variant() const noexcept { return variant_; }

    double mem(Level i, Level j) const noexcept { return mem_[cell(j, i)]; }

    /// Start of the second region in the best cut of [i, j]; j when [i, j] is
    /// best kept whole. Only available in the FullIndices variant.
    Level split(Level i, Level j) const;

    /// Start of the region following the one that begins at i, in the best
    /// cut of [i, L-1]; -1 when unset. Available in both variants.
    Level next(Level i) const;

    /// Bytes held by the mem table and the successor record.
    std::size_t footprint_bytes() const noexcept;

private:
    friend MetDpTables fill_tables(const ScoreMatrix&, TableVariant, Execution, unsigned);

    // mem is stored column-major so the split scan reads mem(k, j) contiguously.
    std::size_t cell(Level i, Level j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(levels_) +
               static_cast<std::size_t>(j);
    }

    int levels_;
    TableVariant variant_;
    std::vector<double> mem_;
    std::vector<Level> links_;
    std::vector<Level> indices_;
};

/// Fills mem for every interval, rows i from L-1 down to 0, columns j
/// ascending, splits k ascending; a split replaces the incumbent only on
/// strict improvement, so keeping [i, j] whole wins ties and smaller k wins
/// among equal splits.
///
/// Parallel execution spreads the cells of one row over `workers` threads
/// (0 means worker_count()) and yields bit-identical tables.
/// Throws InputError for a maximizing objective.
MetDpTables fill_tables(const ScoreMatrix& sm, TableVariant variant = TableVariant::Links,
                        Execution execution = Execution::Sequential, unsigned workers = 0);

/// Interior thresholds on the best cut of [0, L-1]. Throws ConsistencyError
/// on a broken successor chain.
ThresholdSet backtrack(const MetDpTables& tables);

/// Thresholds minimizing the summed region cost over every count and
/// placement. Throws InfeasibleError when no cut of the histogram is finite.
ThresholdSet solve_free(const ScoreMatrix& sm, TableVariant variant = TableVariant::Links,
                        Execution execution = Execution::Sequential);

}  // namespace metdp
