#pragma once

#include <limits>
#include <string>
#include <vector>

#include "metdp/histogram.hpp"
#include "metdp/met_dp.hpp"
#include "metdp/objectives.hpp"

namespace metdp {

/// The 19-level tri-modal reference histogram (78 pixels).
GrayHistogram example_histogram();

inline constexpr double kReferenceInf = std::numeric_limits<double>::infinity();

/// One printed cell: row, column, 3-decimal value (kReferenceInf for INF)
/// and split index (-1 for score cells, which carry none).
struct ReferenceCell {
    int row;
    int col;
    double value;
    int split;
};

const std::vector<ReferenceCell>& reference_scores();
const std::vector<ReferenceCell>& reference_overlapping_mem();
const std::vector<ReferenceCell>& reference_disjoint_mem();

struct CellMismatch {
    std::string table;
    int row = 0;
    int col = 0;
    std::string expected;
    std::string actual;
};

struct ExampleReport {
    ScoreMatrix scores;
    MetDpTables overlapping;
    MetDpTables disjoint;
    std::size_t cells_checked = 0;
    std::vector<CellMismatch> mismatches;

    bool passed() const noexcept { return mismatches.empty(); }
};

/// Builds the MET score matrix and both full-index DP tables for `h`, and
/// compares every reference cell: values within 0.0005, splits exactly.
/// The three zero-weight/zero-variance score cells print as 0.000 in the
/// reference but are degenerate here; they are checked to be degenerate.
ExampleReport run_worked_example(const GrayHistogram& h = example_histogram());

/// Text rendering of the histogram rows (h, i*h, i*i*h and their cumulative sums).
std::string render_histogram_table(const GrayHistogram& h);
/// Upper triangle of Q at 3 decimals, blank for degenerate cells.
std::string render_score_table(const ScoreMatrix& sm);
/// mem/split table with `value[split]` cells and `INF[split]` markers.
std::string render_mem_table(const MetDpTables& t);

std::string format_cell(double value, int split);

}  // namespace metdp
